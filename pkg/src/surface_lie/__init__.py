"""Symplectic characters of the graded Lie algebra of a closed surface group."""
from .charring import (
    PowerTracePoly,
    SymCharacter,
    SymplecticMatrix,
    adams,
    dimension,
    evaluate,
    evaluate_at_matrix,
    make_standard_character,
    ring_arithmetic,
    to_laurent,
)
from .formulas import a_coeff, chi_piece, mobius, verify_labute_series, verify_log_identity, verify_pbw
from .series import CharSeries, sym_series, ueg_series, ufree_series
from .spdecomp import Partition, decompose, irreducible_character, irrep_dimension

__version__ = "0.1.0"

__all__ = [
    "CharSeries", "Partition", "PowerTracePoly", "SymCharacter", "SymplecticMatrix",
    "a_coeff", "adams", "chi_piece", "decompose", "dimension", "evaluate", "evaluate_at_matrix",
    "irreducible_character", "irrep_dimension", "make_standard_character", "mobius", "ring_arithmetic",
    "sym_series", "to_laurent", "ueg_series", "ufree_series", "verify_labute_series",
    "verify_log_identity", "verify_pbw",
]

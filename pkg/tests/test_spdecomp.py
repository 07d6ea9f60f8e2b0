import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surface_lie.charring import SymCharacter, make_standard_character, to_laurent
from surface_lie.errors import InternalConsistencyError, InvalidArgument
from surface_lie.formulas import chi_piece
from surface_lie.spdecomp import (
    Partition,
    decompose,
    decomposition_to_json,
    irreducible_character,
    irrep_dimension,
    laurent_divide,
    partitions_up_to,
    reconstruct,
)


def c2_dimension(a, b):
    return (a - b + 1) * (b + 1) * (a + 2) * (a + b + 3) // 6


def test_partition_canonical():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert str(Partition(())) == "(0)"
    with pytest.raises(InvalidArgument):
        Partition((1, 2))
    with pytest.raises(InvalidArgument):
        Partition((1, -1))
    with pytest.raises(InvalidArgument):
        irreducible_character((1, 1, 1), 2)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_trivial_and_standard(g):
    assert irreducible_character((), g) == SymCharacter.constant(g, 1)
    assert irreducible_character((1,), g) == make_standard_character(g)
    assert irrep_dimension((), g) == 1
    assert irrep_dimension((1,), g) == 2 * g


@pytest.mark.parametrize("lam,dim", [((1, 1), 5), ((2, 1), 16), ((2, 2), 14)])
def test_genus2_dimensions(lam, dim):
    assert c2_dimension(*lam) == dim
    assert irreducible_character(lam, 2).dimension() == dim
    assert irrep_dimension(lam, 2) == dim


def test_c2_dimension_formula_everywhere():
    for lam in partitions_up_to(8, 2):
        a, b = lam.padded(2)
        assert irrep_dimension(lam, 2) == c2_dimension(a, b)


def test_genus1_irreducibles_are_strings():
    for n in range(7):
        expected = SymCharacter(1, {(n - 2 * k,): 1 for k in range(n + 1)})
        assert irreducible_character((n,), 1) == expected


def test_highest_weight_property():
    for g in (1, 2, 3):
        for lam in partitions_up_to(6, g):
            chi = irreducible_character(lam, g)
            padded = lam.padded(g)
            assert chi.leading_dominant() == padded
            assert chi.terms[padded] == 1
            assert chi.is_weyl_invariant() and chi.is_integral()


def test_weyl_dimension_consistency():
    for g in (1, 2, 3):
        for lam in partitions_up_to(6, g):
            assert irrep_dimension(lam, g) == irreducible_character(lam, g).dimension()


def test_decompose_trivial():
    assert decompose(SymCharacter.constant(2, 1)) == [(Partition(()), 1)]


def test_decompose_standard_square():
    out = decompose(make_standard_character(2) ** 2)
    assert out == [(Partition((2, 0)), 1), (Partition((1, 1)), 1), (Partition((0, 0)), 1)]
    assert sum(irrep_dimension(lam, 2) * m for lam, m in out) == 16


def test_decompose_chi2():
    for g in (2, 3):
        assert decompose(to_laurent(chi_piece(g, 2))) == [(Partition((1, 1)), 1)]


def test_decompose_virtual():
    virtual = irreducible_character((1,), 2) - irreducible_character((2, 1), 2).scale(3)
    assert decompose(virtual) == [(Partition((2, 1)), -3), (Partition((1,)), 1)]


@given(st.dictionaries(st.sampled_from(list(partitions_up_to(4, 2))), st.integers(-3, 3), max_size=4))
@settings(max_examples=30, deadline=None)
def test_decompose_roundtrip(mults):
    chi = SymCharacter.zero(2)
    for lam, m in mults.items():
        chi = chi + irreducible_character(lam, 2).scale(m)
    out = decompose(chi)
    assert dict(out) == {lam: m for lam, m in mults.items() if m}
    assert reconstruct(out, 2) == chi


@pytest.mark.parametrize("g", [2, 3])
def test_chi_pieces_are_genuine(g):
    for n in range(1, 7):
        chi = to_laurent(chi_piece(g, n))
        out = decompose(chi)
        assert all(m >= 1 for _, m in out)
        assert reconstruct(out, g) == chi


def test_decompose_rejects_bad_input():
    with pytest.raises(InvalidArgument):
        decompose(make_standard_character(1) / 2)
    with pytest.raises(InvalidArgument):
        decompose(chi_piece(2, 2))  # power-trace form
    with pytest.raises(InvalidArgument):
        decompose(SymCharacter(2, {(-1, 0): 1}))


def test_division_remainder_detected():
    chi = make_standard_character(2)
    with pytest.raises(InternalConsistencyError):
        laurent_divide(chi, chi * chi)
    assert laurent_divide(chi * chi, chi) == chi


def test_decomposition_json():
    out = decompose(make_standard_character(2) ** 2)
    assert decomposition_to_json(out)[0] == {"partition": [2], "multiplicity": 1}

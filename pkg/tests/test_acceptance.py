"""Acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py -s`` (or ``python tests/test_acceptance.py``)
to see one PASS/FAIL line per criterion.  All comparisons are exact.
"""
import random
import sys
import time

import pytest

from surface_lie.charring import (
    PowerTracePoly,
    SymCharacter,
    SymplecticMatrix,
    elementary_symplectic,
    evaluate_at_matrix,
    make_standard_character,
    random_symplectic,
    to_laurent,
)
from surface_lie.formulas import (
    a_coeff,
    chi_piece,
    verify_labute_series,
    verify_log_identity,
    verify_pbw,
)
from surface_lie.lieoracle import quotient_dimension, verify_character
from surface_lie.spdecomp import Partition, decompose, irreducible_character, irrep_dimension, partitions_up_to, reconstruct

RUNTIME_LIMIT_S = 120


def report(name, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    return ok


def _test_matrices(genus, count=6):
    """Transvections (non-diagonalizable), the a<->b swap, an Anosov-type element, and random words."""
    n = 2 * genus
    mats = [
        elementary_symplectic(genus, "upper", 0, 0),
        elementary_symplectic(genus, "lower", 0, 0, -1),
        elementary_symplectic(genus, "swap", 0),
    ]
    if genus == 1:
        mats.append(SymplecticMatrix(1, ((2, 1), (1, 1))))
    else:
        mats.append(elementary_symplectic(genus, "upper", 0, 1) @ elementary_symplectic(genus, "gl", 1, 0))
    rng = random.Random(2024 + genus)
    while len(mats) < count:
        mats.append(random_symplectic(genus, rng))
    assert all(len(M.entries) == n for M in mats)
    return mats


def test_c1_formula_vs_oracle_dimensions():
    start = time.perf_counter()
    cases = [(1, range(1, 7)), (2, range(1, 7)), (3, range(1, 5))]
    mismatches = []
    for g, degrees in cases:
        for n in degrees:
            f, o = chi_piece(g, n).dimension(), quotient_dimension(g, n)
            if f != o:
                mismatches.append((g, n, f, o))
    genus2 = [quotient_dimension(2, n) for n in range(1, 7)]
    elapsed = time.perf_counter() - start
    ok = not mismatches and genus2 == [4, 5, 16, 45, 144, 440] and elapsed < RUNTIME_LIMIT_S
    assert report("C1 formula vs oracle dimensions", ok, f"genus 2 dims {genus2}, {elapsed:.1f}s"), mismatches


def test_c2_trace_level_equivalence():
    failures = []
    total = 0
    for g in (1, 2):
        mats = _test_matrices(g)
        assert len(mats) >= 5
        for n in range(1, 6):
            rep = verify_character(g, n, mats)
            total += len(rep.checks)
            failures += [(g, n, c.matrix_index, c.oracle, c.formula) for c in rep.checks if not c.passed]
    assert report("C2 trace-level equivalence", not failures, f"{total} exact trace comparisons"), failures


def test_c3_closed_forms_agree():
    bad = [(g, n) for g in (1, 2, 3) for n in range(1, 13)
           if a_coeff(g, n, "binomial") != a_coeff(g, n, "recurrence")]
    assert report("C3 binomial vs recurrence A_N, N <= 12", not bad), bad


def test_c4_series_identities():
    failed = []
    for g in (1, 2, 3):
        for ring in (PowerTracePoly, SymCharacter):
            for fn in (verify_log_identity, verify_pbw, verify_labute_series):
                r = fn(g, 8, ring)
                if not r.passed:
                    failed.append(r.to_json())
    assert report("C4 log/pbw/labute identities, g = 1..3, order 8", not failed), failed


def test_c5_torus_collapse():
    ok = to_laurent(chi_piece(1, 1)) == make_standard_character(1)
    nonzero = [n for n in range(2, 9) if not to_laurent(chi_piece(1, n)).is_zero()]
    assert report("C5 torus collapse", ok and not nonzero), nonzero


def test_c6_low_degree_structure():
    ok = True
    for g in (1, 2, 3):
        ok &= decompose(to_laurent(chi_piece(g, 1))) == [(Partition((1,)), 1)]
    for g in (2, 3):
        ok &= decompose(to_laurent(chi_piece(g, 2))) == [(Partition((1, 1)), 1)]
    assert report("C6 chi_1 = (1), chi_2 = (1,1)", ok)


def test_c7_integrality():
    bad = []
    for g in (1, 2, 3):
        for n in range(1, 11):
            if not (a_coeff(g, n) * n).is_integral():
                bad.append(("N*A_N", g, n))
            if not to_laurent(chi_piece(g, n)).is_integral():
                bad.append(("chi_N", g, n))
    evaluations = 0
    for g in (1, 2, 3):
        rng = random.Random(100 + g)
        mats = [random_symplectic(g, rng, steps=rng.randrange(1, 9)) for _ in range(100)]
        for n in range(1, 11):
            chi = chi_piece(g, n)
            for M in mats:
                value = evaluate_at_matrix(chi, M)
                evaluations += 1
                if not isinstance(value, int):
                    bad.append(("value", g, n, M.entries))
    assert report("C7 integrality", not bad, f"{evaluations} matrix evaluations"), bad[:5]


def test_c8_positivity():
    bad = []
    for n in range(1, 7):
        chi = to_laurent(chi_piece(2, n))
        parts = decompose(chi)
        if any(m < 1 for _, m in parts) or reconstruct(parts, 2) != chi:
            bad.append((n, parts))
    assert report("C8 positive multiplicities, g = 2, N <= 6", not bad), bad


def test_c9_weyl_consistency():
    bad = []
    count = 0
    for g in (1, 2, 3):
        for lam in partitions_up_to(6, g):
            count += 1
            # irreducible_character raises on a nonzero division remainder
            if irrep_dimension(lam, g) != irreducible_character(lam, g).dimension():
                bad.append((g, lam))
    assert report("C9 Weyl dimension vs character", not bad, f"{count} partitions"), bad


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-s", "-q"]))

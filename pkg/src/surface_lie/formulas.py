"""Characters of the graded pieces of the surface-group Lie algebra.

The log coefficients ``A_N`` of ``-log(1 - t chi_V + t^2)`` are produced in two
closed forms, and the character of the degree-``N`` piece is recovered by
Moebius inversion:

    N * chi_N = sum_{d | N} mu(N/d) * d * adams(A_d, N/d)

The ``verify_*`` functions check the series identities that tie the pieces
together and return a :class:`Report` instead of raising.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .charring import PowerTracePoly, SymCharacter, to_laurent
from .errors import InternalConsistencyError, InvalidArgument
from .series import (
    CharSeries,
    series_inverse,
    series_log,
    standard_character,
    sym_series,
    ueg_series,
    ufree_series,
)


def _check_positive(n, what="N"):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidArgument(f"{what} must be a positive integer, got {n!r}")


def mobius(n: int) -> int:
    _check_positive(n, "n")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list:
    _check_positive(n, "n")
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def witt_dimension(rank: int, n: int) -> int:
    """Dimension of the degree-``n`` piece of the free Lie algebra on ``rank`` generators."""
    total = sum(mobius(d) * rank ** (n // d) for d in divisors(n))
    if total % n:
        raise InternalConsistencyError("Witt sum not divisible by degree")
    return total // n


def a_coeff(genus: int, N: int, method: str = "binomial") -> PowerTracePoly:
    """Coefficient of ``t^N`` in ``-log(1 - t chi_V + t^2)`` as a polynomial in ``q_1``.

    ``binomial``: sum_{k=0}^{N//2} (-1)^k C(N-k, k) / (N-k) * q_1^(N-2k).
    ``recurrence``: s_N / N with s_0 = 2, s_1 = q_1, s_N = q_1 s_{N-1} - s_{N-2}
    (power sums of the two roots of ``z^2 - q_1 z + 1``).
    """
    _check_positive(N)
    q1 = PowerTracePoly.q(genus, 1)
    if method == "binomial":
        out = PowerTracePoly.zero(genus)
        for k in range(N // 2 + 1):
            c = Fraction((-1) ** k * comb(N - k, k), N - k)
            out = out + (q1 ** (N - 2 * k)).scale(c)
        return out
    if method == "recurrence":
        return _root_power_sum(genus, N).scale(Fraction(1, N))
    raise InvalidArgument(f"unknown method {method!r}; expected binomial or recurrence")


@functools.lru_cache(maxsize=None)
def _root_power_sum(genus: int, n: int) -> PowerTracePoly:
    q1 = PowerTracePoly.q(genus, 1)
    prev, cur = PowerTracePoly.constant(genus, 2), q1
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, q1 * cur - prev
    return cur


@functools.lru_cache(maxsize=None)
def chi_piece(genus: int, N: int, check: bool = True) -> PowerTracePoly:
    """Character of the degree-``N`` graded piece, in power-trace form.

    With ``check`` the Laurent expansion is confirmed integral and the
    dimension nonnegative.
    """
    _check_positive(N)
    total = PowerTracePoly.zero(genus)
    for d in divisors(N):
        mu = mobius(N // d)
        if mu:
            total = total + a_coeff(genus, d, "recurrence").adams(N // d).scale(mu * d)
    chi = total.scale(Fraction(1, N))
    if check:
        dim = chi.dimension()
        if not isinstance(dim, int) or dim < 0:
            raise InternalConsistencyError(f"chi_{N} has dimension {dim}")
        if not to_laurent(chi).is_integral():
            raise InternalConsistencyError(f"chi_{N} is not an integral character")
    return chi


def chi_piece_laurent(genus: int, N: int) -> SymCharacter:
    return to_laurent(chi_piece(genus, N))


# ------------------------------------------------------------------ verifiers

@dataclass
class Report:
    identity: str
    genus: int
    order: int
    passed: bool = True
    first_failure_degree: Optional[int] = None
    degrees: list = field(default_factory=list)

    def record(self, degree: int, ok: bool):
        self.degrees.append((degree, ok))
        if not ok and self.passed:
            self.passed = False
            self.first_failure_degree = degree

    def to_json(self) -> dict:
        doc = {"identity": self.identity, "genus": self.genus, "order": self.order, "pass": self.passed}
        if self.first_failure_degree is not None:
            doc["first_failure_degree"] = self.first_failure_degree
        return doc


def _coerce(p: PowerTracePoly, ring: type):
    return to_laurent(p) if ring is SymCharacter else p


def _check_order(order):
    if not isinstance(order, int) or order < 1:
        raise InvalidArgument(f"order must be >= 1, got {order!r}")


def verify_log_identity(genus: int, order: int, ring: type = PowerTracePoly) -> Report:
    """``log h(U g)`` has coefficient ``A_N = sum_{d i = N} adams(chi_i, d)/d`` in degree N."""
    _check_order(order)
    report = Report("log", genus, order)
    logged = series_log(ueg_series(genus, order, ring))
    chis = {i: _coerce(chi_piece(genus, i), ring) for i in range(1, order + 1)}
    for n in range(1, order + 1):
        rhs = ring.zero(genus)
        for d in divisors(n):
            rhs = rhs + chis[n // d].adams(d).scale(Fraction(1, d))
        ok = logged[n] == rhs and logged[n] == _coerce(a_coeff(genus, n), ring)
        report.record(n, ok)
    return report


def verify_pbw(genus: int, order: int, ring: type = PowerTracePoly) -> Report:
    """``prod_i h(Sym chi_i; t) = h(U g)`` coefficientwise."""
    _check_order(order)
    report = Report("pbw", genus, order)
    product = CharSeries.one(ring, genus, order)
    for i in range(1, order + 1):
        chi = _coerce(chi_piece(genus, i), ring)
        if not chi.is_zero():
            product = product * sym_series(chi, i, order)
    target = ueg_series(genus, order, ring)
    for n in range(order + 1):
        report.record(n, product[n] == target[n])
    return report


def verify_labute_series(genus: int, order: int, ring: type = PowerTracePoly) -> Report:
    """``1/(1 - t chi_V) = h / (1 - t^2 h)`` with ``h = h(U g)``."""
    _check_order(order)
    report = Report("labute", genus, order)
    h = ueg_series(genus, order, ring)
    one = CharSeries.one(ring, genus, order)
    rhs = h * series_inverse(one - h.shift(2))
    lhs = ufree_series(genus, order, ring)
    for n in range(order + 1):
        report.record(n, lhs[n] == rhs[n])
    return report


VERIFIERS = {"log": verify_log_identity, "pbw": verify_pbw, "labute": verify_labute_series}


def dirichlet_roundtrip(genus: int, n: int) -> PowerTracePoly:
    """``sum_{d | n} adams(chi_{n/d}, d) / d``; equals ``A_n`` when the inversion is exact."""
    out = PowerTracePoly.zero(genus)
    for d in divisors(n):
        out = out + chi_piece(genus, n // d).adams(d).scale(Fraction(1, d))
    return out


__all__ = [
    "Report",
    "VERIFIERS",
    "a_coeff",
    "chi_piece",
    "chi_piece_laurent",
    "dirichlet_roundtrip",
    "divisors",
    "mobius",
    "standard_character",
    "verify_labute_series",
    "verify_log_identity",
    "verify_pbw",
    "witt_dimension",
]

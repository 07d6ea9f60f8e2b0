"""Truncated power series in ``t`` with character-ring coefficients.

Every Euler-Poincare series ``h(M; t) = sum_i chi_i t^i`` lives here as a
:class:`CharSeries`.  Truncation orders are explicit and never grow: binary
operations truncate to the smaller order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .charring import PowerTracePoly, Scalar, SymCharacter, _SparsePoly, make_standard_character
from .errors import IncompatibleOperands, InvalidArgument, InvalidSeries


@dataclass(frozen=True)
class CharSeries:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 0:
            raise InvalidArgument(f"order must be a nonnegative integer, got {self.order!r}")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.order + 1:
            raise InvalidArgument(f"need {self.order + 1} coefficients, got {len(coeffs)}")
        first = coeffs[0]
        if not isinstance(first, _SparsePoly):
            raise InvalidArgument("coefficients must be character-ring elements")
        for c in coeffs[1:]:
            if type(c) is not type(first) or c.genus != first.genus:
                raise IncompatibleOperands("series coefficients must share genus and representation")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def genus(self) -> int:
        return self.coeffs[0].genus

    @property
    def ring(self) -> type:
        return type(self.coeffs[0])

    def __getitem__(self, n: int):
        return self.coeffs[n]

    @classmethod
    def from_terms(cls, ring: type, genus: int, order: int, terms: dict) -> "CharSeries":
        """Build from ``{degree: coefficient}``; scalars are promoted, degrees past ``order`` dropped."""
        zero = ring.zero(genus)
        coeffs = [zero] * (order + 1)
        for n, c in terms.items():
            if n <= order:
                coeffs[n] = c if isinstance(c, _SparsePoly) else ring.constant(genus, c)
        return cls(order, tuple(coeffs))

    @classmethod
    def one(cls, ring: type, genus: int, order: int) -> "CharSeries":
        return cls.from_terms(ring, genus, order, {0: 1})

    def truncate(self, order: int) -> "CharSeries":
        if order > self.order:
            raise InvalidArgument("truncation cannot extend a series")
        return CharSeries(order, self.coeffs[: order + 1])

    def _align(self, other: "CharSeries"):
        if not isinstance(other, CharSeries):
            raise IncompatibleOperands("expected a CharSeries")
        if other.ring is not self.ring or other.genus != self.genus:
            raise IncompatibleOperands("series differ in genus or representation")
        n = min(self.order, other.order)
        return n, self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other: "CharSeries") -> "CharSeries":
        n, a, b = self._align(other)
        return CharSeries(n, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "CharSeries") -> "CharSeries":
        n, a, b = self._align(other)
        return CharSeries(n, tuple(x - y for x, y in zip(a, b)))

    def __neg__(self) -> "CharSeries":
        return CharSeries(self.order, tuple(-c for c in self.coeffs))

    def scale(self, c: Scalar) -> "CharSeries":
        return CharSeries(self.order, tuple(x.scale(c) for x in self.coeffs))

    def __mul__(self, other: "CharSeries") -> "CharSeries":
        n, a, b = self._align(other)
        out = []
        for k in range(n + 1):
            acc = self.ring.zero(self.genus)
            for i in range(k + 1):
                if a[i].is_zero() or b[k - i].is_zero():
                    continue
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return CharSeries(n, tuple(out))

    def shift(self, k: int) -> "CharSeries":
        """Multiply by ``t^k`` keeping the same order."""
        zero = self.ring.zero(self.genus)
        return CharSeries(self.order, (zero,) * min(k, self.order + 1) + self.coeffs[: max(self.order + 1 - k, 0)])

    def map(self, fn) -> "CharSeries":
        return CharSeries(self.order, tuple(fn(c) for c in self.coeffs))

    def dimensions(self) -> list:
        return [c.dimension() for c in self.coeffs]

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [c.to_records() for c in self.coeffs]}

    def __str__(self):
        parts = [f"({c})*t^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"


def _require_constant(a: CharSeries, value: int, what: str):
    c0 = a.coeffs[0]
    if c0 != a.ring.constant(a.genus, value):
        raise InvalidSeries(f"{what} requires constant term {value}, got {c0}")


def series_arithmetic(a: CharSeries, b: CharSeries, op: str) -> CharSeries:
    if op == "add":
        return a + b
    if op == "multiply":
        return a * b
    raise InvalidArgument(f"unknown series op {op!r}")


def series_inverse(a: CharSeries) -> CharSeries:
    _require_constant(a, 1, "inverse")
    out = [a.coeffs[0]]
    for n in range(1, a.order + 1):
        acc = a.ring.zero(a.genus)
        for k in range(1, n + 1):
            if not a[k].is_zero() and not out[n - k].is_zero():
                acc = acc - a[k] * out[n - k]
        out.append(acc)
    return CharSeries(a.order, tuple(out))


def series_log(a: CharSeries) -> CharSeries:
    # n a_n = sum_{k=1..n} k b_k a_{n-k}, solved for b_n
    _require_constant(a, 1, "log")
    zero = a.ring.zero(a.genus)
    b = [zero]
    for n in range(1, a.order + 1):
        acc = a[n].scale(n)
        for k in range(1, n):
            if not b[k].is_zero() and not a[n - k].is_zero():
                acc = acc - (b[k] * a[n - k]).scale(k)
        b.append(acc.scale(Fraction(1, n)))
    return CharSeries(a.order, tuple(b))


def series_exp(b: CharSeries) -> CharSeries:
    if not b.coeffs[0].is_zero():
        raise InvalidSeries(f"exp requires constant term 0, got {b.coeffs[0]}")
    a = [b.ring.constant(b.genus, 1)]
    for n in range(1, b.order + 1):
        acc = b.ring.zero(b.genus)
        for k in range(1, n + 1):
            if not b[k].is_zero() and not a[n - k].is_zero():
                acc = acc + (b[k] * a[n - k]).scale(k)
        a.append(acc.scale(Fraction(1, n)))
    return CharSeries(b.order, tuple(a))


def standard_character(genus: int, ring: type = PowerTracePoly):
    if ring is PowerTracePoly:
        return PowerTracePoly.q(genus, 1)
    if ring is SymCharacter:
        return make_standard_character(genus)
    raise InvalidArgument(f"unknown character ring {ring!r}")


def _check_order(order):
    if not isinstance(order, int) or order < 0:
        raise InvalidArgument(f"order must be a nonnegative integer, got {order!r}")


def ueg_series(genus: int, order: int, ring: type = PowerTracePoly) -> CharSeries:
    """``1 / (1 - t chi_V + t^2)``, the series of the enveloping algebra of the surface Lie algebra."""
    _check_order(order)
    chi = standard_character(genus, ring)
    denom = CharSeries.from_terms(ring, genus, order, {0: 1, 1: -chi, 2: 1})
    return series_inverse(denom)


def ufree_series(genus: int, order: int, ring: type = PowerTracePoly) -> CharSeries:
    """``1 / (1 - t chi_V)``, the tensor algebra on ``V``."""
    _check_order(order)
    chi = standard_character(genus, ring)
    return CharSeries(order, tuple(chi ** n for n in range(order + 1)))


def sym_series(chi, degree: int, order: int) -> CharSeries:
    """Graded character of ``Sym(M)`` for ``M`` with character ``chi`` placed in ``degree``.

    Computed as ``exp(sum_d adams(chi, d)/d * t^(degree*d))``; integrality of the
    output is checked.
    """
    if not isinstance(degree, int) or degree < 1:
        raise InvalidArgument(f"placement degree must be a positive integer, got {degree!r}")
    _check_order(order)
    # power-trace forms of genuine characters may carry fractional coefficients,
    # so only the dimension is checked there
    if isinstance(chi, SymCharacter) and not chi.is_integral():
        raise InvalidArgument("sym_series needs an integral character")
    if not isinstance(chi.dimension(), int):
        raise InvalidArgument("sym_series needs an integral character")
    ring = type(chi)
    terms = {}
    d = 1
    while degree * d <= order:
        terms[degree * d] = chi.adams(d).scale(Fraction(1, d))
        d += 1
    result = series_exp(CharSeries.from_terms(ring, chi.genus, order, terms))
    if ring is SymCharacter and not all(c.is_integral() for c in result.coeffs):
        raise InvalidArgument("sym_series input is not a genuine (integral) character")
    return result

"""Exact arithmetic in the character ring of Sp(2g).

Two interchangeable representations are provided:

* :class:`SymCharacter` -- a Laurent polynomial in eigenvalue variables
  ``x_1..x_g`` invariant under the hyperoctahedral group (permutations and
  inversions of the variables).  Terms are stored over the full Weyl orbit.
* :class:`PowerTracePoly` -- a polynomial in symbols ``q_d`` where ``q_d``
  stands for ``trace(M^d)`` of the standard representation.  This form
  evaluates exactly on integer symplectic matrices.

Coefficients are ``int`` where possible and :class:`fractions.Fraction`
otherwise.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    IncompatibleOperands,
    InternalConsistencyError,
    InvalidArgument,
    InvalidMatrix,
)

Scalar = Union[int, Fraction]


def _norm(c) -> Scalar:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise InvalidArgument(f"coefficient must be int or Fraction, got {type(c).__name__}")


def format_rational(c: Scalar) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s: str) -> Scalar:
    try:
        return _norm(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgument(f"bad rational {s!r}") from exc


def _check_genus(genus) -> int:
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 1:
        raise InvalidArgument(f"genus must be a positive integer, got {genus!r}")
    return genus


class _SparsePoly:
    """Shared machinery: an immutable sparse mapping monomial -> coefficient."""

    __slots__ = ("genus", "_terms", "_hash")
    kind = "abstract"

    def __init__(self, genus: int, terms: Mapping | None = None):
        self.genus = _check_genus(genus)
        clean = {}
        for key, c in (terms or {}).items():
            c = _norm(c)
            if c:
                clean[self._check_key(key)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, genus, terms):
        # trusted constructor: terms already pruned and normalized
        obj = cls.__new__(cls)
        obj.genus = genus
        obj._terms = terms
        obj._hash = None
        return obj

    # subclass hooks
    def _check_key(self, key):
        raise NotImplementedError

    @classmethod
    def _one_key(cls, genus):
        raise NotImplementedError

    @staticmethod
    def _mul_key(a, b):
        raise NotImplementedError

    @staticmethod
    def _adams_key(key, d):
        raise NotImplementedError

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    @classmethod
    def constant(cls, genus: int, c: Scalar = 1):
        genus = _check_genus(genus)
        return cls(genus, {cls._one_key(genus): c})

    @classmethod
    def zero(cls, genus: int):
        return cls(genus)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def constant_term(self) -> Scalar:
        return self._terms.get(self._one_key(self.genus), 0)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self).constant(self.genus, other)
        if isinstance(other, _SparsePoly):
            if type(other) is not type(self):
                raise IncompatibleOperands(f"cannot combine {self.kind} with {other.kind}")
            if other.genus != self.genus:
                raise IncompatibleOperands(f"genus mismatch: {self.genus} vs {other.genus}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = _norm(out.get(k, 0) + c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return self._raw(self.genus, out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.genus, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar):
        c = _norm(Fraction(c))
        if not c:
            return self._raw(self.genus, {})
        return self._raw(self.genus, {k: _norm(v * c) for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        mk = self._mul_key
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = mk(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return self._raw(self.genus, {k: _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division of a character by zero")
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InvalidArgument(f"power exponent must be a nonnegative integer, got {n!r}")
        result = type(self).constant(self.genus, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def adams(self, d: int):
        if not isinstance(d, int) or d < 1:
            raise InvalidArgument(f"Adams index must be a positive integer, got {d!r}")
        if d == 1:
            return self
        ak = self._adams_key
        out: dict = {}
        for k, c in self._terms.items():
            nk = ak(k, d)
            out[nk] = out.get(nk, 0) + c
        return self._raw(self.genus, {k: c for k, c in out.items() if c})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = type(self).constant(self.genus, other)
        if type(other) is not type(self):
            return NotImplemented
        return self.genus == other.genus and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.genus, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}(genus={self.genus}, {self})"


def dominant(exponents: Sequence[int]) -> tuple:
    """Representative of the Weyl orbit in the dominant chamber."""
    return tuple(sorted((abs(e) for e in exponents), reverse=True))


def is_dominant(exponents: Sequence[int]) -> bool:
    return tuple(exponents) == dominant(exponents)


def _laurent_sort_key(e):
    return (dominant(e), e)


class SymCharacter(_SparsePoly):
    """Weyl-invariant Laurent polynomial in ``x_1..x_g``; keys are exponent tuples."""

    __slots__ = ()
    kind = "laurent"

    def _check_key(self, key):
        key = tuple(int(e) for e in key)
        if len(key) != self.genus:
            raise InvalidArgument(f"exponent vector {key} has length != genus {self.genus}")
        return key

    @classmethod
    def _one_key(cls, genus):
        return (0,) * genus

    @staticmethod
    def _mul_key(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def _adams_key(key, d):
        return tuple(e * d for e in key)

    def sorted_terms(self) -> list:
        """Terms in canonical order: dominant representative descending, then exponents."""
        return sorted(self._terms.items(), key=lambda kv: _laurent_sort_key(kv[0]), reverse=True)

    def is_weyl_invariant(self) -> bool:
        # adjacent transpositions plus one sign flip generate the hyperoctahedral group
        g = self.genus
        for e, c in self._terms.items():
            flipped = (-e[0],) + e[1:]
            if self._terms.get(flipped) != c:
                return False
            for i in range(g - 1):
                swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
                if self._terms.get(swapped) != c:
                    return False
        return True

    def leading_dominant(self):
        """Lexicographically largest dominant exponent vector with nonzero coefficient."""
        best = None
        for e in self._terms:
            if is_dominant(e) and (best is None or e > best):
                best = e
        return best

    def dimension(self) -> Scalar:
        return _norm(sum(self._terms.values(), Fraction(0)))

    def evaluate(self, eigenvalues: Sequence[Scalar]) -> Scalar:
        xs = _check_eigenvalues(eigenvalues, self.genus)
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for x, k in zip(xs, e):
                if k:
                    term *= x ** k
            total += term
        return _norm(total)

    def to_records(self) -> list:
        return [
            {"exponents": list(e), "coefficient": format_rational(c)}
            for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, genus: int, records: Iterable[Mapping]) -> "SymCharacter":
        terms: dict = {}
        for rec in records:
            e = tuple(rec["exponents"])
            terms[e] = terms.get(e, 0) + parse_rational(str(rec["coefficient"]))
        return cls(genus, terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            parts.append(_format_term(c, mono))
        return _join_terms(parts)


class PowerTracePoly(_SparsePoly):
    """Polynomial in ``q_d = trace(M^d)``; keys are sorted tuples of ``(d, e)`` pairs."""

    __slots__ = ()
    kind = "power-trace"

    def _check_key(self, key):
        key = tuple(sorted((int(d), int(e)) for d, e in key))
        ds = [d for d, _ in key]
        if any(d < 1 for d in ds) or any(e < 1 for _, e in key) or len(set(ds)) != len(ds):
            raise InvalidArgument(f"malformed power-trace monomial {key}")
        return key

    @classmethod
    def _one_key(cls, genus):
        return ()

    @staticmethod
    def _mul_key(a, b):
        if not a:
            return b
        if not b:
            return a
        merged = dict(a)
        for d, e in b:
            merged[d] = merged.get(d, 0) + e
        return tuple(sorted(merged.items()))

    @staticmethod
    def _adams_key(key, d):
        return tuple((k * d, e) for k, e in key)

    @classmethod
    def q(cls, genus: int, d: int = 1) -> "PowerTracePoly":
        if not isinstance(d, int) or d < 1:
            raise InvalidArgument(f"q index must be positive, got {d!r}")
        return cls(genus, {((d, 1),): 1})

    def max_index(self) -> int:
        return max((d for key in self._terms for d, _ in key), default=0)

    def weighted_degree(self) -> int:
        return max((sum(d * e for d, e in key) for key in self._terms), default=0)

    def sorted_terms(self) -> list:
        return sorted(
            self._terms.items(),
            key=lambda kv: (sum(d * e for d, e in kv[0]), tuple((-d, e) for d, e in kv[0])),
            reverse=True,
        )

    def dimension(self) -> Scalar:
        n = 2 * self.genus
        return _norm(sum((Fraction(c) * n ** sum(e for _, e in k) for k, c in self._terms.items()), Fraction(0)))

    def evaluate(self, eigenvalues: Sequence[Scalar]) -> Scalar:
        xs = _check_eigenvalues(eigenvalues, self.genus)
        traces = {d: sum(x ** d + x ** -d for x in xs) for d in range(1, self.max_index() + 1)}
        return _substitute(self, traces)

    def to_records(self) -> list:
        return [
            {"monomial": [[d, e] for d, e in key], "coefficient": format_rational(c)}
            for key, c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, genus: int, records: Iterable[Mapping]) -> "PowerTracePoly":
        terms: dict = {}
        for rec in records:
            k = tuple(sorted((int(d), int(e)) for d, e in rec["monomial"]))
            terms[k] = terms.get(k, 0) + parse_rational(str(rec["coefficient"]))
        return cls(genus, terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            mono = "*".join(f"q{d}" if e == 1 else f"q{d}^{e}" for d, e in key)
            parts.append(_format_term(c, mono))
        return _join_terms(parts)


def _format_term(c, mono):
    c = Fraction(c)
    if not mono:
        return format_rational(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{format_rational(c)}*{mono}"


def _join_terms(parts):
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _check_eigenvalues(eigenvalues, genus):
    xs = [Fraction(x) for x in eigenvalues]
    if len(xs) != genus:
        raise InvalidArgument(f"expected {genus} eigenvalues, got {len(xs)}")
    if any(x == 0 for x in xs):
        raise InvalidArgument("eigenvalues must be nonzero")
    return xs


def _substitute(p: PowerTracePoly, traces: Mapping[int, Scalar]) -> Scalar:
    total = Fraction(0)
    for key, c in p.terms.items():
        term = Fraction(c)
        for d, e in key:
            term *= Fraction(traces[d]) ** e
        total += term
    return _norm(total)


# ---------------------------------------------------------------- public ops

def make_standard_character(genus: int) -> SymCharacter:
    """``chi_V = sum_i (x_i + 1/x_i)``."""
    genus = _check_genus(genus)
    terms = {}
    for i in range(genus):
        for s in (1, -1):
            e = [0] * genus
            e[i] = s
            terms[tuple(e)] = 1
    return SymCharacter(genus, terms)


_OPS = ("add", "subtract", "multiply", "scale", "power")


def ring_arithmetic(a, b, op: str):
    """Dispatch form of the ring operations; ``b`` is a scalar for scale/power."""
    if op == "add":
        return a + b
    if op == "subtract":
        return a - b
    if op == "multiply":
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "power":
        return a ** b
    raise InvalidArgument(f"unknown op {op!r}; expected one of {_OPS}")


def adams(chi, d: int):
    return chi.adams(d)


@functools.lru_cache(maxsize=None)
def _power_sum_laurent(genus: int, d: int) -> SymCharacter:
    return make_standard_character(genus).adams(d)


def to_laurent(p: PowerTracePoly) -> SymCharacter:
    """Substitute ``q_d -> sum_i (x_i^d + x_i^-d)`` and expand."""
    g = p.genus
    powers: dict = {}

    def pw(d, e):
        if (d, e) not in powers:
            powers[(d, e)] = _power_sum_laurent(g, d) ** e
        return powers[(d, e)]

    out = SymCharacter.zero(g)
    for key, c in p.terms.items():
        term = SymCharacter.constant(g, c)
        for d, e in key:
            term = term * pw(d, e)
        out = out + term
    return out


def dimension(chi) -> Scalar:
    return chi.dimension()


def evaluate(chi, eigenvalues: Sequence[Scalar]) -> Scalar:
    return chi.evaluate(eigenvalues)


# ---------------------------------------------------------------- matrices

def symplectic_form(genus: int) -> tuple:
    g = _check_genus(genus)
    n = 2 * g
    J = [[0] * n for _ in range(n)]
    for i in range(g):
        J[i][g + i] = 1
        J[g + i][i] = -1
    return tuple(tuple(r) for r in J)


def _matmul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


@dataclass(frozen=True)
class SymplecticMatrix:
    """Integer matrix in basis order (a_1..a_g, b_1..b_g) with ``M^T J M = J``."""

    genus: int
    entries: tuple

    def __post_init__(self):
        g = _check_genus(self.genus)
        n = 2 * g
        try:
            rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        except (TypeError, ValueError) as exc:
            raise InvalidMatrix("matrix entries must be integers") from exc
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InvalidMatrix(f"expected a {n}x{n} matrix for genus {g}")
        object.__setattr__(self, "entries", rows)
        J = symplectic_form(g)
        MT = tuple(zip(*rows))
        lhs = _matmul(_matmul(MT, J), rows)
        for i in range(n):
            for j in range(n):
                if lhs[i][j] != J[i][j]:
                    raise InvalidMatrix(
                        f"not symplectic: (M^T J M - J)[{i}][{j}] = {lhs[i][j] - J[i][j]}"
                    )

    @classmethod
    def identity(cls, genus: int) -> "SymplecticMatrix":
        n = 2 * genus
        return cls(genus, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if self.genus != other.genus:
            raise IncompatibleOperands("genus mismatch")
        return SymplecticMatrix(self.genus, _matmul(self.entries, other.entries))

    def traces(self, up_to: int) -> dict:
        """``{d: trace(M^d)}`` for ``d = 1..up_to`` by exact integer powers."""
        out = {}
        P = self.entries
        for d in range(1, up_to + 1):
            if d > 1:
                P = _matmul(P, self.entries)
            out[d] = sum(P[i][i] for i in range(len(P)))
        return out

    def to_json(self) -> dict:
        return {"genus": self.genus, "matrix": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "SymplecticMatrix":
        try:
            return cls(int(doc["genus"]), tuple(tuple(r) for r in doc["matrix"]))
        except (KeyError, TypeError) as exc:
            raise InvalidMatrix("matrix document needs 'genus' and 'matrix' fields") from exc


def evaluate_at_matrix(p: PowerTracePoly, M: SymplecticMatrix, require_integer: bool = False) -> Scalar:
    """Exact value of ``p`` at ``M`` via ``q_d = trace(M^d)``.

    With ``require_integer`` the result must be an integer (genuine characters).
    """
    if not isinstance(M, SymplecticMatrix):
        raise InvalidMatrix("expected a SymplecticMatrix")
    if M.genus != p.genus:
        raise IncompatibleOperands(f"genus mismatch: poly {p.genus}, matrix {M.genus}")
    value = _substitute(p, M.traces(p.max_index()))
    if require_integer and not isinstance(value, int):
        raise InternalConsistencyError(f"character value {value} at matrix is not an integer")
    return value


def elementary_symplectic(genus: int, kind: str, i: int, j: int = 0, sign: int = 1) -> SymplecticMatrix:
    """Generators of Sp(2g, Z).

    ``kind``: "upper" (a-block shear ``b_i += sign*a_j`` symmetrized), "lower"
    (the transpose shape), "swap" (``a_i -> b_i, b_i -> -a_i``), "gl"
    (``a_i += sign*a_j`` with the dual change on b).
    """
    n = 2 * genus
    E = [[int(r == c) for c in range(n)] for r in range(n)]
    g = genus
    if kind == "upper":
        E[i][g + j] += sign
        if i != j:
            E[j][g + i] += sign
    elif kind == "lower":
        E[g + i][j] += sign
        if i != j:
            E[g + j][i] += sign
    elif kind == "swap":
        E[i][i] = 0
        E[g + i][g + i] = 0
        E[g + i][i] = -1
        E[i][g + i] = 1
    elif kind == "gl":
        if i == j:
            raise InvalidArgument("gl generator needs i != j")
        E[i][j] += sign
        E[g + j][g + i] -= sign
    else:
        raise InvalidArgument(f"unknown generator kind {kind!r}")
    return SymplecticMatrix(genus, tuple(tuple(r) for r in E))


def random_symplectic(genus: int, rng: random.Random, steps: int = 6) -> SymplecticMatrix:
    """Random word in the elementary generators; entries stay modest for small ``steps``."""
    M = SymplecticMatrix.identity(genus)
    kinds = ["upper", "lower", "swap"] + (["gl"] if genus > 1 else [])
    for _ in range(steps):
        kind = rng.choice(kinds)
        i = rng.randrange(genus)
        j = rng.randrange(genus)
        if kind == "gl":
            while j == i:
                j = rng.randrange(genus)
        M = M @ elementary_symplectic(genus, kind, i, j, rng.choice((1, -1)))
    return M


def diagonal_symplectic(eigen: Sequence[int]) -> SymplecticMatrix:
    """``diag(u_1..u_g, 1/u_1..1/u_g)`` for ``u_i = +-1`` (the only integral choices)."""
    g = len(eigen)
    if any(u not in (1, -1) for u in eigen):
        raise InvalidArgument("integral diagonal symplectic entries must be +-1")
    n = 2 * g
    diag = list(eigen) + list(eigen)
    return SymplecticMatrix(g, tuple(tuple(diag[r] if r == c else 0 for c in range(n)) for r in range(n)))


def orbit(exponents: Sequence[int]) -> set:
    """Full hyperoctahedral orbit of an exponent vector."""
    out = set()
    for perm in itertools.permutations(exponents):
        for signs in itertools.product((1, -1), repeat=len(perm)):
            out.add(tuple(s * e for s, e in zip(signs, perm)))
    return out

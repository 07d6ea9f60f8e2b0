"""Brute-force model of the surface Lie algebra inside tensor powers of V.

The free Lie algebra on the 2g letters ``a_1 < b_1 < ... < a_g < b_g`` is
realized by standard bracketings of Lyndon words in ``V^{(x)N}``.  The ideal
generated by ``rho = sum_i [a_i, b_i]`` is built degree by degree as
``r_2 = <rho>``, ``r_{n+1} = [V, r_n]``, and the quotient ``L_N / r_N`` is
the degree-N piece.  Everything is exact (``int``/``Fraction``).

Letters are integers: ``a_i -> 2(i-1)``, ``b_i -> 2(i-1)+1``.  Symplectic
matrices use the basis order ``(a_1..a_g, b_1..b_g)``; :func:`letter_to_basis`
translates.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .charring import PowerTracePoly, SymplecticMatrix, evaluate_at_matrix
from .errors import IncompatibleOperands, InternalConsistencyError, InvalidArgument, ResourceLimit
from .formulas import chi_piece, divisors, mobius, witt_dimension


@dataclass(frozen=True)
class OracleConfig:
    budget: int = 20_000  # max (2g)^N coordinates


DEFAULT_CONFIG = OracleConfig()


def check_budget(genus: int, N: int, config: OracleConfig):
    size = (2 * genus) ** N
    if size > config.budget:
        raise ResourceLimit(
            f"oracle needs (2g)^N = {size} coordinates for genus {genus}, degree {N}; "
            f"budget is {config.budget}. Try a smaller degree or raise the budget."
        )


def _check_args(genus, N, least=1):
    if not isinstance(genus, int) or genus < 1:
        raise InvalidArgument(f"genus must be a positive integer, got {genus!r}")
    if not isinstance(N, int) or N < least:
        raise InvalidArgument(f"degree must be an integer >= {least}, got {N!r}")


def letter_to_basis(letter: int, genus: int) -> int:
    return letter // 2 if letter % 2 == 0 else genus + letter // 2


# ------------------------------------------------------------- Lyndon words

def is_lyndon(word: Sequence[int]) -> bool:
    w = tuple(word)
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_words(alphabet_size: int, N: int) -> list:
    """Lyndon words of length exactly ``N`` in lexicographic order (Duval's generator)."""
    if N < 1:
        raise InvalidArgument(f"word length must be >= 1, got {N}")
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == N:
            out.append(tuple(w))
        m = len(w)
        while len(w) < N:
            w.append(w[len(w) - m])
        while w and w[-1] == alphabet_size - 1:
            w.pop()
    return out


def lyndon_basis(genus: int, N: int) -> list:
    _check_args(genus, N)
    return lyndon_words(2 * genus, N)


def standard_factorization(word: tuple) -> tuple:
    """``w = u v`` with ``v`` the longest proper Lyndon suffix."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise InvalidArgument(f"{word} has no standard factorization")


# ---------------------------------------------------------- tensor elements

class TensorElement:
    """Homogeneous element of ``V^{(x)N}``: ``{word: coefficient}``."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Optional[dict] = None):
        self.degree = degree
        self.terms = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) != degree:
                raise InvalidArgument(f"word {w} does not have length {degree}")
            if c:
                self.terms[w] = c

    @classmethod
    def letter(cls, a: int) -> "TensorElement":
        return cls(1, {(a,): 1})

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if other.degree != self.degree:
            raise IncompatibleOperands("degree mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return TensorElement(self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "TensorElement":
        return TensorElement(self.degree, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Concatenation (tensor) product."""
        out: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                out[w] = out.get(w, 0) + a * b
        return TensorElement(self.degree + other.degree, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.degree == other.degree and self.terms == other.terms

    def __repr__(self):
        return f"TensorElement({self.degree}, {self.terms})"


def bracket(x: TensorElement, y: TensorElement) -> TensorElement:
    return x * y - y * x


@functools.lru_cache(maxsize=None)
def lyndon_bracketing(word: tuple) -> TensorElement:
    """Standard bracketing of a Lyndon word, expanded in ``V^{(x)N}``."""
    if len(word) == 1:
        return TensorElement.letter(word[0])
    u, v = standard_factorization(word)
    return bracket(lyndon_bracketing(u), lyndon_bracketing(v))


def relation_element(genus: int) -> TensorElement:
    """``rho = sum_i (a_i b_i - b_i a_i)``."""
    _check_args(genus, 2, 2)
    terms = {}
    for i in range(genus):
        a, b = 2 * i, 2 * i + 1
        terms[(a, b)] = 1
        terms[(b, a)] = -1
    return TensorElement(2, terms)


def act(M: SymplecticMatrix, x: TensorElement) -> TensorElement:
    """Diagonal action of ``M`` on ``V^{(x)N}``."""
    g = M.genus
    n = 2 * g
    basis_to_letter = {letter_to_basis(l, g): l for l in range(n)}
    # column of M for each letter, expressed in letters
    cols = {}
    for l in range(n):
        j = letter_to_basis(l, g)
        cols[l] = [(basis_to_letter[i], M.entries[i][j]) for i in range(n) if M.entries[i][j]]
    out: dict = {}
    for word, c in x.terms.items():
        partial = {(): c}
        for l in word:
            nxt: dict = {}
            for w, v in partial.items():
                for m, e in cols[l]:
                    k = w + (m,)
                    nxt[k] = nxt.get(k, 0) + v * e
            partial = nxt
        for w, v in partial.items():
            out[w] = out.get(w, 0) + v
    return TensorElement(x.degree, out)


# ---------------------------------------------------------- echelon spaces

def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@dataclass
class GradedSubspace:
    """Row space in reduced row-echelon form over the word basis of ``V^{(x)N}``.

    Pivots are the lexicographically smallest word of each row; rows are keyed
    by pivot, so equal subspaces have identical ``rows``.
    """

    degree: int
    rows: dict = field(default_factory=dict)  # pivot word -> {word: coeff}, coeff at pivot = 1

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Remainder of ``vec`` modulo the subspace (one pass suffices in RREF)."""
        vec = dict(vec)
        for p in [w for w in vec if w in self.rows]:
            c = vec.get(p)
            if not c:
                continue
            for w, v in self.rows[p].items():
                nv = _norm(vec.get(w, 0) - c * v)
                if nv:
                    vec[w] = nv
                else:
                    vec.pop(w, None)
        return vec

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; returns True when it enlarged the space."""
        vec = self.reduce(vec)
        if not vec:
            return False
        p = min(vec)
        inv = Fraction(1) / vec[p]
        row = {w: _norm(v * inv) for w, v in vec.items()}
        for q, other in self.rows.items():
            c = other.get(p)
            if c:
                for w, v in row.items():
                    nv = _norm(other.get(w, 0) - c * v)
                    if nv:
                        other[w] = nv
                    else:
                        other.pop(w, None)
        self.rows[p] = row
        return True

    def contains(self, vec) -> bool:
        if isinstance(vec, TensorElement):
            vec = vec.terms
        return not self.reduce(vec)

    def contains_subspace(self, other: "GradedSubspace") -> bool:
        return all(self.contains(r) for r in other.rows.values())

    def basis(self) -> list:
        return [TensorElement(self.degree, self.rows[p]) for p in sorted(self.rows)]

    def trace(self, M: SymplecticMatrix) -> Fraction:
        """Trace of ``M`` restricted to this (assumed invariant) subspace.

        In RREF the coordinate of a vector along row ``p`` is its entry at the
        pivot ``p``, so only pivot entries of the images are needed.
        """
        g = M.genus
        E = M.entries
        idx = [letter_to_basis(l, g) for l in range(2 * g)]
        total = Fraction(0)
        for p, row in self.rows.items():
            pr = [idx[l] for l in p]
            for u, c in row.items():
                prod = c
                for i, l in zip(pr, u):
                    e = E[i][idx[l]]
                    if not e:
                        prod = 0
                        break
                    prod *= e
                if prod:
                    total += prod
        return _norm(total)

    def is_invariant(self, M: SymplecticMatrix) -> bool:
        return all(self.contains(act(M, b)) for b in self.basis())


def echelonize(degree: int, vectors: Iterable) -> GradedSubspace:
    space = GradedSubspace(degree)
    for v in vectors:
        space.add(v.terms if isinstance(v, TensorElement) else v)
    return space


# -------------------------------------------------- free Lie algebra, ideal

@functools.lru_cache(maxsize=None)
def _free_lie_subspace(genus: int, N: int) -> GradedSubspace:
    return echelonize(N, (lyndon_bracketing(w) for w in lyndon_basis(genus, N)))


def free_lie_subspace(genus: int, N: int, config: OracleConfig = DEFAULT_CONFIG) -> GradedSubspace:
    _check_args(genus, N)
    check_budget(genus, N, config)
    space = _free_lie_subspace(genus, N)
    if space.dimension != witt_dimension(2 * genus, N):
        raise InternalConsistencyError("Lyndon bracketings are not independent")
    return space


def free_lie_character(genus: int, N: int) -> PowerTracePoly:
    """Character of ``L_N(V)``: ``(1/N) sum_{d | N} mu(d) adams(chi_V, d)^(N/d)``."""
    _check_args(genus, N)
    out = PowerTracePoly.zero(genus)
    for d in divisors(N):
        mu = mobius(d)
        if mu:
            out = out + (PowerTracePoly.q(genus, d) ** (N // d)).scale(mu)
    return out.scale(Fraction(1, N))


@functools.lru_cache(maxsize=None)
def _ideal_subspace(genus: int, N: int) -> GradedSubspace:
    if N == 2:
        return echelonize(2, [relation_element(genus)])
    prev = _ideal_subspace(genus, N - 1)
    letters = [TensorElement.letter(a) for a in range(2 * genus)]
    return echelonize(N, (bracket(x, w) for w in prev.basis() for x in letters))


def ideal_subspace(genus: int, N: int, config: OracleConfig = DEFAULT_CONFIG) -> GradedSubspace:
    """Degree-N layer of the Lie ideal generated by ``rho``."""
    _check_args(genus, N, 2)
    check_budget(genus, N, config)
    return _ideal_subspace(genus, N)


def derived_ideal_subspace(genus: int, N: int, config: OracleConfig = DEFAULT_CONFIG) -> GradedSubspace:
    """Degree-N layer of ``[r, r]`` = span of ``[r_i, r_j]`` with ``i + j = N``."""
    _check_args(genus, N, 2)
    check_budget(genus, N, config)
    gens = []
    for i in range(2, N - 1):
        j = N - i
        if j < i:
            break
        left = _ideal_subspace(genus, i).basis()
        right = _ideal_subspace(genus, j).basis()
        gens.extend(bracket(x, y) for x in left for y in right)
    return echelonize(N, gens)


def quotient_dimension(genus: int, N: int, config: OracleConfig = DEFAULT_CONFIG) -> int:
    _check_args(genus, N)
    L = free_lie_subspace(genus, N, config)
    if N == 1:
        return L.dimension
    return L.dimension - ideal_subspace(genus, N, config).dimension


def quotient_trace(genus: int, N: int, M: SymplecticMatrix, config: OracleConfig = DEFAULT_CONFIG) -> int:
    """Trace of ``M`` on ``L_N / r_N`` as ``tr(L_N) - tr(r_N)``."""
    _check_args(genus, N)
    if not isinstance(M, SymplecticMatrix) or M.genus != genus:
        raise IncompatibleOperands("matrix genus does not match")
    value = free_lie_subspace(genus, N, config).trace(M)
    if N > 1:
        value -= ideal_subspace(genus, N, config).trace(M)
    value = _norm(Fraction(value))
    if not isinstance(value, int):
        raise InternalConsistencyError(f"quotient trace {value} is not an integer")
    return value


@dataclass
class CharacterCheck:
    matrix_index: int
    oracle: int
    formula: int

    @property
    def passed(self) -> bool:
        return self.oracle == self.formula


@dataclass
class CharacterReport:
    genus: int
    degree: int
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "degree": self.degree,
            "pass": self.passed,
            "checks": [
                {"matrix": c.matrix_index, "oracle": c.oracle, "formula": c.formula, "pass": c.passed}
                for c in self.checks
            ],
        }


def verify_character(
    genus: int, N: int, matrices: Sequence[SymplecticMatrix], config: OracleConfig = DEFAULT_CONFIG
) -> CharacterReport:
    """Compare oracle traces on ``L_N / r_N`` with the closed-form character."""
    _check_args(genus, N)
    check_budget(genus, N, config)
    chi = chi_piece(genus, N)
    checks = []
    for k, M in enumerate(matrices):
        checks.append(
            CharacterCheck(k, quotient_trace(genus, N, M, config), evaluate_at_matrix(chi, M, require_integer=True))
        )
    return CharacterReport(genus, N, checks)

"""Irreducible Sp(2g) characters and greedy highest-weight decomposition."""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .charring import SymCharacter
from .errors import InternalConsistencyError, InvalidArgument


@dataclass(frozen=True, order=True)
class Partition:
    """Dominant weight; trailing zeros are stripped, so ``Partition((1, 0)) == Partition((1,))``."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidArgument(f"{parts} is not a weakly decreasing sequence of nonnegative integers")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def padded(self, genus: int) -> tuple:
        if len(self.parts) > genus:
            raise InvalidArgument(f"partition {self.parts} has more than {genus} parts")
        return self.parts + (0,) * (genus - len(self.parts))

    def size(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts or (0,))) + ")"


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def _alternant(genus: int, shifted: tuple) -> SymCharacter:
    """``det(x_j^{l_i} - x_j^{-l_i})`` expanded by the Leibniz formula.

    Anti-invariant under the Weyl group, so it is stored as a plain dict-backed
    SymCharacter without the invariance guarantee.
    """
    terms: dict = {}
    for perm in itertools.permutations(range(genus)):
        sign = _perm_sign(perm)
        # entry (i, perm[i]) is x_{perm[i]}^{l_i} - x_{perm[i]}^{-l_i}
        for signs in itertools.product((1, -1), repeat=genus):
            e = [0] * genus
            s = sign
            for i, eps in enumerate(signs):
                e[perm[i]] = eps * shifted[i]
                s *= eps
            key = tuple(e)
            terms[key] = terms.get(key, 0) + s
    return SymCharacter(genus, terms)


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def laurent_divide(num: SymCharacter, den: SymCharacter) -> SymCharacter:
    """Exact Laurent long division under lexicographic order; raises on a nonzero remainder."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    genus = num.genus
    lead = max(den.terms)
    lead_c = den.terms[lead]
    # coordinatewise degree bounds on the quotient keep inexact input finite
    lo = [min(e[i] for e in num.terms) - min(e[i] for e in den.terms) for i in range(genus)] if num.terms else []
    hi = [max(e[i] for e in num.terms) - max(e[i] for e in den.terms) for i in range(genus)] if num.terms else []
    rem = dict(num.terms)
    quot: dict = {}
    while rem:
        top = max(rem)
        qe = tuple(a - b for a, b in zip(top, lead))
        if any(not (a <= x <= b) for x, a, b in zip(qe, lo, hi)):
            raise InternalConsistencyError("nonzero remainder in Laurent division")
        qc = Fraction(rem[top]) / lead_c
        qc = qc.numerator if qc.denominator == 1 else qc
        quot[qe] = qc
        for e, c in den.terms.items():
            k = tuple(a + b for a, b in zip(qe, e))
            v = rem.get(k, 0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return SymCharacter(genus, quot)


@functools.lru_cache(maxsize=None)
def _weyl_denominator(genus: int) -> SymCharacter:
    return _alternant(genus, tuple(genus - i for i in range(genus)))


@functools.lru_cache(maxsize=None)
def _irreducible(genus: int, padded: tuple) -> SymCharacter:
    shifted = tuple(lam + genus - i for i, lam in enumerate(padded))
    chi = laurent_divide(_alternant(genus, shifted), _weyl_denominator(genus))
    if not chi.is_integral() or chi.leading_dominant() != padded or chi.terms[padded] != 1:
        raise InternalConsistencyError(f"Weyl character for {padded} lacks the highest-weight property")
    return chi


def irreducible_character(lam, genus: int) -> SymCharacter:
    """Weyl character formula for type C_g."""
    lam = _as_partition(lam)
    return _irreducible(genus, lam.padded(genus))


def irrep_dimension(lam, genus: int) -> int:
    """Weyl dimension formula: product over positive roots of <lam + rho, a> / <rho, a>."""
    lam = _as_partition(lam)
    l = [p + genus - i for i, p in enumerate(lam.padded(genus))]
    r = [genus - i for i in range(genus)]
    num = den = 1
    for i in range(genus):
        num *= l[i]
        den *= r[i]
        for j in range(i + 1, genus):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (r[i] - r[j]) * (r[i] + r[j])
    if num % den:
        raise InternalConsistencyError("Weyl dimension is not an integer")
    return num // den


def decompose(chi: SymCharacter) -> list:
    """Multiplicities of irreducibles, as ``[(Partition, int)]`` sorted by partition descending."""
    if not isinstance(chi, SymCharacter):
        raise InvalidArgument("decompose needs a SymCharacter (use to_laurent first)")
    if not chi.is_integral():
        raise InvalidArgument("decompose needs an integral character")
    genus = chi.genus
    out = []
    rest = chi
    last = None
    while not rest.is_zero():
        top = rest.leading_dominant()
        if top is None:
            raise InvalidArgument("input is not Weyl-invariant (no dominant term)")
        if last is not None and top >= last:
            raise InternalConsistencyError("leading dominant weight failed to decrease")
        c = rest.terms[top]
        out.append((Partition(top), c))
        rest = rest - irreducible_character(top, genus).scale(c)
        last = top
    return sorted(out, key=lambda pc: pc[0].parts, reverse=True)


def reconstruct(decomposition, genus: int) -> SymCharacter:
    out = SymCharacter.zero(genus)
    for lam, m in decomposition:
        out = out + irreducible_character(lam, genus).scale(m)
    return out


def decomposition_to_json(decomposition) -> list:
    return [{"partition": list(lam.parts), "multiplicity": m} for lam, m in decomposition]


def partitions_up_to(size: int, max_parts: int):
    """All partitions with ``|lam| <= size`` and at most ``max_parts`` parts."""
    def gen(n, largest, slots):
        if n == 0 or slots == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in gen(n - first, first, slots - 1):
                yield (first,) + rest
    for n in range(size + 1):
        for p in gen(n, n, max_parts):
            if sum(p) == n:
                yield Partition(p)

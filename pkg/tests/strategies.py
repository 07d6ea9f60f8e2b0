from fractions import Fraction

from hypothesis import strategies as st

from surface_lie.charring import PowerTracePoly, SymCharacter, orbit

genera = st.integers(min_value=1, max_value=3)
small_ints = st.integers(min_value=-3, max_value=3)
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def laurent_characters(draw, genus=None):
    """Weyl-invariant Laurent polynomials built as sums of orbit sums."""
    g = draw(genera) if genus is None else genus
    terms = {}
    for _ in range(draw(st.integers(0, 3))):
        e = tuple(draw(st.lists(st.integers(0, 2), min_size=g, max_size=g)))
        c = draw(small_ints)
        for w in orbit(e):
            terms[w] = terms.get(w, 0) + c
    return SymCharacter(g, terms)


@st.composite
def power_trace_polys(draw, genus=None):
    g = draw(genera) if genus is None else genus
    terms = {}
    for _ in range(draw(st.integers(0, 3))):
        ds = draw(st.lists(st.integers(1, 3), max_size=2, unique=True))
        key = tuple((d, draw(st.integers(1, 2))) for d in sorted(ds))
        terms[key] = terms.get(key, 0) + draw(rationals)
    return PowerTracePoly(g, terms)


@st.composite
def nonzero_rationals(draw):
    x = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
    return x if x != 0 else Fraction(1, 2)

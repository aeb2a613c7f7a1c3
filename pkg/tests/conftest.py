import itertools

import pytest
from hypothesis import strategies as st

from monores import MonomialIdeal, RingContext, family_F
from monores.parser import parse_ideal

RINGS = [RingContext("abcd"[:k]) for k in range(1, 5)]


@st.composite
def rings(draw, max_vars=4):
    return RINGS[draw(st.integers(1, max_vars)) - 1]


def exponent_vectors(d, max_exp=5):
    return st.lists(st.integers(0, max_exp), min_size=d, max_size=d)


@st.composite
def ideals(draw, ring=None, max_exp=5, max_gens=4, proper=True):
    ring = ring or draw(rings())
    gens = draw(st.lists(exponent_vectors(len(ring), max_exp), min_size=1, max_size=max_gens))
    I = MonomialIdeal(ring, gens)
    if proper:
        from hypothesis import assume
        assume(I.is_proper_nonzero())
    return I


@st.composite
def ideal_pairs(draw, n=2, **kw):
    ring = draw(rings())
    return tuple(draw(ideals(ring=ring, **kw)) for _ in range(n))


def box(ring, max_exp):
    """Every monomial of ``ring`` with exponents at most ``max_exp``."""
    from monores import Monomial
    return [Monomial(ring, e) for e in itertools.product(range(max_exp + 1), repeat=len(ring))]


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def brute_minimal(rows):
    rows = set(map(tuple, rows))
    keep = [g for g in rows if not any(h != g and divides(h, g) for h in rows)]
    return sorted(keep, key=lambda e: (sum(e), [-x for x in e]))


@pytest.fixture
def F1():
    return family_F(1)


@pytest.fixture
def xyz():
    return RingContext("xyz")


@pytest.fixture
def ideal():
    """``ideal("(x^3, x*y^2)", "x,y,z")`` shorthand."""
    def make(text, ring="x,y,z"):
        return parse_ideal(ring, text)
    return make

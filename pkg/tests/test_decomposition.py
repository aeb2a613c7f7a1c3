import pytest
from hypothesis import given

from monores import (MonomialIdeal, associated_primes, family_F, intersect,
                     irreducible_decomposition, maximal_associated_primes,
                     primary_decomposition, radical, star_ideal)
from monores.errors import ImproperIdealError
from monores.ideal import contains_ideal, intersect_all

from conftest import ideals


def strs(xs):
    return sorted(str(x) for x in xs)


def test_irreducible_examples(ideal, F1):
    comps = irreducible_decomposition(F1)
    assert strs(comps) == ["(x, y^3)", "(x, z)", "(y^2, x^3)"]
    assert intersect_all([c.ideal() for c in comps]) == F1
    assert strs(irreducible_decomposition(ideal("(x^2, y^3)"))) == ["(x^2, y^3)"]
    I23 = star_ideal(2, 3)
    assert strs(irreducible_decomposition(I23)) == ["(x1, x2)", "(x1, x3)", "(x2, x3)"]


def test_associated_primes_examples(ideal, F1):
    assert strs(associated_primes(F1)) == ["(x, y)", "(x, z)"]
    assert len(associated_primes(star_ideal(2, 3))) == 3
    assert strs(associated_primes(ideal("(x^5)"))) == ["(x)"]


def test_embedded_prime(ideal):
    # (x^2, x*y) = (x) cap (x^2, y): the embedded prime is associated, not maximal-only
    I = ideal("(x^2, x*y)", "x,y")
    assert strs(associated_primes(I)) == ["(x)", "(x, y)"]
    assert strs(maximal_associated_primes(I)) == ["(x, y)"]


def test_primary_examples(ideal, F1):
    assert strs(primary_decomposition(F1)) == ["(x, z)", "(x^3, x*y^2, y^3)"]
    assert strs(primary_decomposition(ideal("(x^2, y^3)"))) == ["(x^2, y^3)"]
    assert strs(primary_decomposition(family_F(2))) == ["(x^5, x^3*y^2, y^5)", "(z, x^3)"]


def test_improper_inputs(xyz):
    with pytest.raises(ImproperIdealError):
        irreducible_decomposition(MonomialIdeal.zero(xyz))
    with pytest.raises(ImproperIdealError):
        primary_decomposition(MonomialIdeal.unit(xyz))


@given(ideals())
def test_reintersection(I):
    irr = irreducible_decomposition(I)
    assert intersect_all([c.ideal() for c in irr]) == I
    assert intersect_all(primary_decomposition(I)) == I


@given(ideals())
def test_irredundant(I):
    comps = [c.ideal() for c in irreducible_decomposition(I)]
    for k, C in enumerate(comps):
        rest = comps[:k] + comps[k + 1:]
        if rest:
            assert not contains_ideal(C, intersect_all(rest))


@given(ideals())
def test_primary_radicals(I):
    primes = associated_primes(I)
    comps = primary_decomposition(I)
    rads = [radical(Q) for Q in comps]
    assert len(set(rads)) == len(rads)
    assert set(rads) <= {p.ideal() for p in primes}


@given(ideals())
def test_maximal_primes(I):
    allp = associated_primes(I)
    maxp = maximal_associated_primes(I)
    assert set(maxp) <= set(allp)
    assert not any(p < q for p in maxp for q in maxp)
    assert all(any(p <= q for q in maxp) for p in allp)

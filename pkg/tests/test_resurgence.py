import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monores import (Monomial, MonomialIdeal, check_containment, evaluate_max_sup, family_F,
                     iterated_sum_bound, pm_ideal, product_witness, res_set_11,
                     rho_a_star_configuration, rho_a_sum_reference, scan, sharp_sum_bound,
                     star_ideal)
from monores.errors import CertificateError, ImproperIdealError
from monores.families import disjoint_sum, rename
from monores.parser import parse_ideal, parse_monomial
from monores.resurgence import COLLAPSE, TWO_THIRDS, ContainmentCertificate

from conftest import ideals


def brute_not_contained(I, m, r):
    from monores.ideal import outside, power
    from monores.symbolic import symbolic_power
    return bool(outside(power(I, r), symbolic_power(I, m)))


@pytest.fixture(scope="module")
def F1_plus_F2():
    return disjoint_sum(family_F(1), family_F(2, ("t", "u", "v")))


def test_check_containment_examples(F1):
    c = check_containment(F1, 2, 2)
    assert not c.contained and str(c.witness) == "x^3*y^3"
    assert c.recheck()
    c = check_containment(F1, 2, 1)
    assert c.contained and c.witness is None and c.recheck()
    assert check_containment(F1, 3, 2).contained
    with pytest.raises(ValueError):
        check_containment(F1, 0, 1)


def test_certificate_validation(F1):
    with pytest.raises(ValueError):
        ContainmentCertificate(2, 2, "contained", Monomial(F1.ring, (3, 3, 0)))
    with pytest.raises(ValueError):
        ContainmentCertificate(2, 2, "not-contained")
    bogus = ContainmentCertificate(2, 2, "not-contained", Monomial(F1.ring, (3, 0, 0)), F1)
    assert not bogus.recheck()


def test_scan_F1_grid(F1):
    rep = scan(F1, 6, 6)
    assert rep.best_ratio == 1
    assert rep.best_cells == [(k, k) for k in range(2, 7)]
    assert str(rep.witnesses[2, 2]) == "x^3*y^3"
    want = {(m, r) for m in range(1, 7) for r in range(1, 7) if m <= r} - {(1, 1)}
    assert set(rep.not_contained()) == want


def test_scan_shortcuts_agree_with_full(F1):
    fast, full = scan(F1, 5, 5), scan(F1, 5, 5, shortcuts=False)
    assert fast.verdicts() == full.verdicts()
    assert fast.best_ratio == full.best_ratio and fast.witnesses == full.witnesses
    assert fast.computed() < full.computed() == 25
    assert scan(F1, 5, 5, threads=4).verdicts() == fast.verdicts()


def test_scan_prime():
    I = parse_ideal("x,y", "(x)")
    rep = scan(I, 6, 6)
    assert rep.best_ratio == Fraction(5, 6) and rep.best_cells == [(5, 6)]


def test_scan_rejects_improper():
    with pytest.raises(ImproperIdealError):
        scan(parse_ideal("x,y", "(1)"), 2, 2)
    with pytest.raises(ValueError):
        scan(family_F(1), 0, 2)


def test_sum_example(F1_plus_F2):
    rep = scan(F1_plus_F2, 5, 4)
    assert rep.best_ratio == Fraction(5, 4)
    assert rep.best_cells == [(5, 4)]
    assert str(rep.witnesses[5, 4]) == "x^3*y^3*t^10*u^5"
    for n in (2, 3, 4):
        assert check_containment(F1_plus_F2, n, n - 1).contained


@settings(max_examples=25, deadline=None)
@given(ideals(max_exp=3, max_gens=3))
def test_scan_matches_pointwise(I):
    rep = scan(I, 3, 3)
    for (m, r), c in rep.cells.items():
        assert c.contained == (not brute_not_contained(I, m, r))
    for k, w in rep.witnesses.items():
        assert check_containment(I, *k).witness == w


def test_product_witness_pm2():
    P = pm_ideal(2)
    star = star_ideal(2, 3)
    f = Monomial(star.ring, (1, 1, 1))
    parts = [(rename(star, k), 2, 2, rename_monomial(f, k)) for k in (1, 2, 3)]
    cert = product_witness(parts)
    assert (cert.m, cert.r, cert.ratio) == (6, 4, Fraction(3, 2))
    assert cert.ideal == P
    assert set(cert.witness.exponents) == {1}
    assert cert.recheck()


def rename_monomial(f, k):
    return Monomial(rename(MonomialIdeal(f.ring, [f.exponents]), k).ring, f.exponents)


def test_product_witness_shared_ring(F1_plus_F2):
    R = F1_plus_F2.ring
    I = parse_ideal(R, "(x^3, x*y^2, y^3*z)")
    J = parse_ideal(R, "(t^5, t^3*u^2, u^5*v)")
    cert = product_witness([(I, 2, 2, parse_monomial(R, "x^3*y^3")),
                            (J, 3, 3, parse_monomial(R, "t^10*u^5"))])
    assert (cert.m, cert.r) == (5, 4) and str(cert.witness) == "x^3*y^3*t^10*u^5"


def test_product_witness_names_bad_part(F1):
    good = (F1, 2, 2, Monomial(F1.ring, (3, 3, 0)))
    J = family_F(1, ("a", "b", "c"))
    bad = (J, 2, 2, Monomial(J.ring, (3, 0, 0)))
    with pytest.raises(CertificateError, match="part 1"):
        product_witness([good, bad])
    with pytest.raises(CertificateError, match="part 0"):
        product_witness([(F1, 1, 1, Monomial(F1.ring, (3, 0, 0))), good])


def test_bound_examples():
    r = sharp_sum_bound(Fraction(3, 2), 1)
    assert r.bound == Fraction(5, 3) and r.rule == TWO_THIRDS
    r = sharp_sum_bound(2, 1)
    assert r.bound == 2 and r.rule == COLLAPSE and r.collapses
    assert sharp_sum_bound(1, 1).bound == Fraction(4, 3)
    with pytest.raises(ValueError):
        sharp_sum_bound(Fraction(1, 2), 1)


def brute_sup(a, b, n_max):
    vals = [Fraction(m * a + n * b, m + n - 1)
            for m in range(2, n_max + 1) for n in range(2, n_max + 1)]
    return max([a, b] + vals)


@settings(max_examples=200)
@given(st.fractions(min_value=1, max_value=6, max_denominator=12),
       st.fractions(min_value=1, max_value=6, max_denominator=12),
       st.integers(2, 12))
def test_sup_matches_brute_force(a, b, n):
    enum, closed = evaluate_max_sup(a, b, n)
    assert enum == brute_sup(a, b, n)
    assert closed == max(a, b, 2 * (a + b) / 3)
    if max(a, b) < 2 * min(a, b):
        assert enum == closed


def test_sup_examples():
    assert evaluate_max_sup(1, 1, 10) == (Fraction(4, 3), Fraction(4, 3))
    assert evaluate_max_sup(3, 1, 10)[0] == 3


def test_iterated_bounds():
    assert iterated_sum_bound(1, 3) == [1, Fraction(4, 3), Fraction(14, 9)]
    for a in (1, Fraction(4, 3), 2, Fraction(5, 2)):
        vals = iterated_sum_bound(a, 10)
        assert all(v < 2 * a for v in vals)
        assert vals == sorted(vals)
    with pytest.raises(ValueError):
        iterated_sum_bound(Fraction(1, 2), 3)


def test_reference_values():
    assert rho_a_star_configuration(2, 3) == Fraction(4, 3)
    assert rho_a_star_configuration(3, 5) == Fraction(9, 5)
    assert all(rho_a_star_configuration(1, d) == 1 for d in range(1, 8))
    for m in range(2, 6):
        assert rho_a_star_configuration(m, 2 * m - 1) == Fraction(m * m, 2 * m - 1)
    assert rho_a_sum_reference([Fraction(4, 3), 1, Fraction(9, 5)]) == Fraction(9, 5)
    assert res_set_11(6) == {1, Fraction(4, 3), Fraction(5, 4), Fraction(6, 5), Fraction(7, 6)}
    with pytest.raises(ValueError):
        rho_a_star_configuration(4, 3)

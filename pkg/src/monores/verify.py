"""Reproduction suite: every computational claim, checked exactly.

:func:`verify_paper` runs the checks and returns a report with one line per
claim.  ``fixtures`` lets a caller swap in a different base ideal for F_1,
which is how the negative control is exercised.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .decomposition import irreducible_decomposition, primary_decomposition
from .families import (disjoint_sum, family_F, fd_membership_oracle, fd_shift,
                       fd_symbolic_closed_form, pm_ideal, rename, star_ideal, star_primes)
from .ideal import (MonomialIdeal, add, colon, contains_ideal, contains_monomial,
                    intersect, intersect_all, mul, power, saturate)
from .monomial import Monomial, RingContext
from .resurgence import (check_containment, closed_form_max, evaluate_max_sup,
                         iterated_sum_bound, product_witness, res_set_11,
                         rho_a_star_configuration, rho_a_sum_reference, scan,
                         sharp_sum_bound)
from .symbolic import detect_blocks, symbolic_power, symbolic_power_blockwise


@dataclass
class ItemResult:
    anchor: str
    claim: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.anchor}: {self.claim}"
        if self.detail:
            out += f"\n         {self.detail}"
        return out


@dataclass
class VerificationReport:
    items: list[ItemResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.passed for i in self.items)

    @property
    def anchors(self) -> list[str]:
        return [i.anchor for i in self.items]

    def failures(self) -> list[ItemResult]:
        return [i for i in self.items if not i.passed]

    def format(self) -> str:
        lines = [i.line() for i in self.items]
        n_ok = sum(i.passed for i in self.items)
        lines.append(f"{n_ok}/{len(self.items)} checks passed")
        return "\n".join(lines)


def random_ideal(rng: random.Random, ring: RingContext, max_exp: int = 5,
                 max_gens: int = 4) -> MonomialIdeal:
    """Random proper nonzero monomial ideal with exponents in ``[0, max_exp]``."""
    d = len(ring)
    while True:
        gens = [[rng.randint(0, max_exp) for _ in range(d)]
                for _ in range(rng.randint(1, max_gens))]
        I = MonomialIdeal(ring, gens)
        if I.is_proper_nonzero():
            return I


def random_monomial(rng: random.Random, ring: RingContext, max_exp: int) -> Monomial:
    return Monomial(ring, [rng.randint(0, max_exp) for _ in ring.variables])


# Each check returns (passed, detail).
Check = Callable[[dict], "tuple[bool, str]"]


def _f_closed_form(fx):
    bad = [(d, n) for d in (1, 2, 3) for n in range(1, 7)
           if symbolic_power(family_F(d), n) != fd_symbolic_closed_form(d, n)]
    return not bad, f"mismatches at (d, n) = {bad}" if bad else "d = 1..3, n = 1..6"


def _f_ordinary_equal(fx):
    bad = [(d, n) for d in (1, 2, 3) for n in range(1, d + 1)
           if symbolic_power(family_F(d), n) != power(family_F(d), n)]
    return not bad, f"mismatches at {bad}" if bad else "all n <= d, d = 1..3"


def _f_decomposition(fx):
    bad = []
    for d in (1, 2, 3):
        F = family_F(d)
        want = [MonomialIdeal(F.ring, [(2 * d + 1, 0, 0), (2 * d - 1, 2, 0), (0, 2 * d + 1, 0)]),
                MonomialIdeal(F.ring, [(2 * d - 1, 0, 0), (0, 0, 1)])]
        got = primary_decomposition(F)
        if set(got) != set(want):
            bad.append((d, [str(g) for g in got]))
    return not bad, f"got {bad}" if bad else "d = 1..3"


def _example_witness(fx):
    F1 = fx["F1"]
    f = Monomial(F1.ring, (3, 3, 0))
    cert = check_containment(F1, 2, 2)
    in_sym = contains_monomial(symbolic_power(F1, 2), f)
    in_pow = contains_monomial(power(F1, 2), f)
    ok = in_sym and not in_pow and cert.witness == f
    detail = (f"I = {F1}; x^3*y^3 in I^(2): {in_sym}, in I^2: {in_pow}; "
              f"least witness found: {cert.witness}")
    return ok, detail


def _example_sum(fx):
    F1 = fx["F1"]
    G = F1._from_matrix(RingContext(["u", "v", "w"]), F1.matrix, canonical=True)
    f = Monomial(F1.ring, (3, 3, 0))
    g = Monomial(G.ring, (3, 3, 0))
    cert = product_witness([(F1, 2, 2, f), (G, 2, 2, g)])
    bound = sharp_sum_bound(1, 1).bound
    ok = (cert.m, cert.r) == (4, 3) and str(cert.witness) == "x^3*y^3*u^3*v^3" and bound == Fraction(4, 3)
    return ok, f"(I+J)^(4) not in (I+J)^3 via {cert.witness}; sum bound {bound}"


def _binomial_expansion(fx):
    F1 = fx["F1"]
    cases = [
        ("F1+F1", disjoint_sum(F1, rename(F1, 2)), 4),
        ("F1+F2", disjoint_sum(F1, family_F(2, ("t", "u", "v"))), 4),
        ("P_2", pm_ideal(2), 3),
    ]
    bad = []
    for name, P, smax in cases:
        blocks = detect_blocks(P)
        for s in range(1, smax + 1):
            if symbolic_power_blockwise(blocks, s) != symbolic_power(P, s):
                bad.append((name, s))
    return not bad, f"mismatches {bad}" if bad else "F1+F1, F1+F2 (s <= 4), P_2 (s <= 3)"


def _strict_example(fx):
    P = disjoint_sum(fx["F1"], family_F(2, ("t", "u", "v")))
    rep = scan(P, 5, 4)
    wit = rep.witnesses.get((5, 4))
    chain = [check_containment(P, n, n - 1).contained for n in (2, 3, 4)]
    ok = (rep.best_ratio == Fraction(5, 4) and str(wit) == "x^3*y^3*t^10*u^5" and all(chain))
    return ok, (f"best ratio {rep.best_ratio} at {rep.best_cells}, witness {wit}; "
                f"P^(n) in P^(n-1) for n = 2, 3, 4: {chain}")


def _resurgence_one(fx):
    notes, ok = [], True
    for d in (1, 2):
        rep = scan(family_F(d), 6, 6)
        ok &= rep.best_ratio == 1
        notes.append(f"d={d}: best ratio {rep.best_ratio}")
    for d in (1, 2, 3):
        F = family_F(d)
        f = fd_shift(d, F.ring)
        good = (contains_monomial(symbolic_power(F, d + 1), f)
                and not contains_monomial(power(F, d + 1), f))
        ok &= good
        notes.append(f"(x^{d}*y)^{2 * d + 1} certificate: {good}")
    return ok, "; ".join(notes)


def _pm_product_witness(fx):
    star = star_ideal(2, 3)
    parts = []
    for j in (1, 2, 3):
        S = rename(star, j)
        parts.append((S, 2, 2, Monomial(S.ring, (1, 1, 1))))
    cert = product_witness(parts)
    ok = (cert.m, cert.r) == (6, 4) and cert.ratio == Fraction(3, 2) == Fraction(3 * 2, 4)
    ok &= cert.ideal == pm_ideal(2) and cert.recheck()
    return ok, f"P_2^(6) not in P_2^4, witness {cert.witness}, ratio {cert.ratio}"


def _star_intersection(fx):
    bad = []
    for m, d in ((2, 3), (2, 4), (3, 5)):
        I = star_ideal(m, d)
        if intersect_all(star_primes(m, d, I.ring)) != I:
            bad.append((m, d))
    return not bad, f"mismatches {bad}" if bad else "(m, d) = (2,3), (2,4), (3,5)"


def _star_corollary(fx):
    ok, notes = True, []
    for m in (2, 3):
        I = star_ideal(m, 2 * m - 1)
        f = Monomial(I.ring, [1] * (2 * m - 1))
        good = contains_monomial(symbolic_power(I, m), f) and not contains_monomial(power(I, 2), f)
        ok &= good
        notes.append(f"m={m}: {good}")
    return ok, ", ".join(notes)


def _rho_a_reference(fx):
    a = rho_a_star_configuration(2, 3)
    b = rho_a_star_configuration(3, 5)
    pm = [rho_a_sum_reference([rho_a_star_configuration(m, 2 * m - 1)] * 3) for m in (2, 3)]
    ok = (a == Fraction(4, 3) and b == Fraction(9, 5)
          and pm == [Fraction(m * m, 2 * m - 1) for m in (2, 3)])
    return ok, f"I_(2,3): {a}, I_(3,5): {b}, P_2, P_3: {pm[0]}, {pm[1]}"


def _sup_evaluation(fx):
    rng = random.Random(fx.get("seed", 0))
    bad = 0
    for _ in range(1000):
        a = Fraction(rng.randint(0, 60), rng.randint(1, 12))
        b = Fraction(rng.randint(0, 60), rng.randint(1, 12))
        enum, closed = evaluate_max_sup(a, b, 50)
        if enum > closed:
            bad += 1
        elif max(a, b) < 2 * min(a, b):
            at_22 = max(a, b, (2 * a + 2 * b) / 3)
            if not enum == closed == at_22:
                bad += 1
    return bad == 0, f"{bad} failures over 1000 random pairs, n_max = 50"


def _iterated_bound(fx):
    ok, notes = True, []
    for a in (Fraction(1), Fraction(4, 3), Fraction(2), Fraction(5, 2)):
        vals = iterated_sum_bound(a, 10)
        ok &= all(v < 2 * a for v in vals) and all(x <= y for x, y in zip(vals, vals[1:]))
        notes.append(f"a={a}: r_10={vals[-1]}")
    ok &= iterated_sum_bound(1, 3) == [1, Fraction(4, 3), Fraction(14, 9)]
    return ok, "; ".join(notes)


def _res_set(fx):
    got = res_set_11(6)
    want = {Fraction(1), Fraction(4, 3), Fraction(5, 4), Fraction(6, 5), Fraction(7, 6)}
    return got == want, "values " + ", ".join(str(v) for v in sorted(got))


def _algebra_identities(fx):
    rng = random.Random(fx.get("seed", 0))
    failures = []
    for trial in range(150):
        ring = RingContext(["a", "b", "c", "d"][:rng.randint(1, 4)])
        I, J, K = (random_ideal(rng, ring) for _ in range(3))
        m = random_monomial(rng, ring, 5)
        s, t = rng.randint(0, 3), rng.randint(0, 3)
        vs = rng.sample(range(len(ring)), rng.randint(1, len(ring)))
        sat = saturate(I, vs)
        checks = {
            "distributive": mul(I, add(J, K)) == add(mul(I, J), mul(I, K)),
            "power additive": mul(power(I, s), power(I, t)) == power(I, s + t),
            "intersection bounds": contains_ideal(I, intersect(I, J))
                                   and contains_ideal(add(I, J), I)
                                   and contains_ideal(intersect(I, J), mul(I, J)),
            "colon": contains_ideal(I, mul(MonomialIdeal(ring, [m]), colon(I, m)))
                     and contains_ideal(colon(I, m), I),
            "saturation": saturate(sat, vs) == sat,
        }
        failures += [(trial, k) for k, ok in checks.items() if not ok]
    return not failures, f"failures {failures[:5]}" if failures else "150 random triples"


def _decomposition_roundtrip(fx):
    rng = random.Random(fx.get("seed", 0) + 1)
    bad = []
    for trial in range(150):
        ring = RingContext(["a", "b", "c", "d"][:rng.randint(1, 4)])
        I = random_ideal(rng, ring)
        irr = [c.ideal() for c in irreducible_decomposition(I)]
        prim = primary_decomposition(I)
        if intersect_all(irr) != I or intersect_all(prim) != I:
            bad.append(str(I))
    return not bad, f"failures {bad[:3]}" if bad else "150 random ideals"


def _fd_oracle(fx):
    rng = random.Random(fx.get("seed", 0) + 2)
    bad = []
    for d in (1, 2, 3):
        F = family_F(d)
        for n in range(1, 6):
            Fn = power(F, n)
            for _ in range(500):
                f = random_monomial(rng, F.ring, (2 * d + 1) * n)
                if fd_membership_oracle(d, n, f) != contains_monomial(Fn, f):
                    bad.append((d, n, str(f)))
    return not bad, f"disagreements {bad[:3]}" if bad else "500 queries per (d, n), d <= 3, n <= 5"


CHECKS: list[tuple[str, str, Check]] = [
    ("d-family closed form", "F_d^(n) = F_d^n + (x^d*y)^(2d+1) F_d^(n-d-1)", _f_closed_form),
    ("d-family low powers", "F_d^(n) = F_d^n for n <= d", _f_ordinary_equal),
    ("d-family decomposition", "F_d = (x^(2d+1), x^(2d-1)*y^2, y^(2d+1)) cap (x^(2d-1), z)",
     _f_decomposition),
    ("example witness", "x^3*y^3 in F_1^(2) minus F_1^2", _example_witness),
    ("sum of two copies", "(I+J)^(4) not in (I+J)^3 and max{1, 1, 4/3} = 4/3", _example_sum),
    ("binomial expansion", "(I+J)^(s) = sum_i I^(i) J^(s-i)", _binomial_expansion),
    ("strict example", "scan(F_1 + F_2) gives 5/4 with witness x^3*y^3*t^10*u^5",
     _strict_example),
    ("resurgence one", "F_d scans to ratio 1; (x^d*y)^(2d+1) in F_d^(d+1) minus F_d^(d+1)",
     _resurgence_one),
    ("product witness", "P_2^(6) not in P_2^4, ratio 3m/4 = 3/2", _pm_product_witness),
    ("star decomposition", "I_(m,d) = intersection of all m-variable primes", _star_intersection),
    ("star witness", "x_1...x_(2m-1) in I^(m) minus I^2", _star_corollary),
    ("asymptotic reference", "rho_a(I_(m,d)) = m(d-m+1)/d, rho_a(P_m) = m^2/(2m-1)",
     _rho_a_reference),
    ("sup evaluation", "sup{a, b, (ma+nb)/(m+n-1)} = max{a, b, 2(a+b)/3}", _sup_evaluation),
    ("iterated sums", "bound recursion stays below 2a", _iterated_bound),
    ("Res(1,1)", "{1} and (n+1)/n for n >= 3", _res_set),
    ("ideal identities", "distributivity, power additivity, colon and saturation laws",
     _algebra_identities),
    ("decomposition round trip", "components re-intersect to the input", _decomposition_roundtrip),
    ("F_d membership system", "integer system agrees with generic membership", _fd_oracle),
]


def _run(anchor, claim, check, fixtures) -> ItemResult:
    t0 = time.perf_counter()
    try:
        passed, detail = check(fixtures)
    except Exception as exc:  # a crash is a failed check, reported with its cause
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return ItemResult(anchor, claim, bool(passed), detail, time.perf_counter() - t0)


def verify_paper(fixtures: dict | None = None, threads: int = 1,
                 only: list[str] | None = None) -> VerificationReport:
    """Run every reproduction check; output order is fixed regardless of threads."""
    fx = {"F1": family_F(1), "seed": 0}
    fx.update(fixtures or {})
    todo = [c for c in CHECKS if only is None or c[0] in only]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            items = list(pool.map(lambda c: _run(*c, fx), todo))
    else:
        items = [_run(*c, fx) for c in todo]
    return VerificationReport(items)

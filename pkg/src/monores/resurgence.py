"""Containment certificates, grid scans and the closed-form resurgence bounds.

Everything here is exact: ratios are :class:`fractions.Fraction` and verdicts
come from monomial divisibility.  A scan only ever certifies a *lower* bound
for the resurgence, since the supremum need not be attained on a finite grid.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import CertificateError, ImproperIdealError, RingMismatchError
from .families import disjoint_sum, embed_monomial
from .ideal import MonomialIdeal, contains_monomial, outside, power
from .monomial import Monomial
from .symbolic import in_symbolic_power, symbolic_power

CONTAINED = "contained"
NOT_CONTAINED = "not-contained"


@dataclass(frozen=True)
class ContainmentCertificate:
    """Outcome of testing ``I^(m) ⊆ I^r``; a witness is present iff not contained."""

    m: int
    r: int
    verdict: str
    witness: Monomial | None = None
    ideal: MonomialIdeal | None = None

    def __post_init__(self):
        if self.verdict not in (CONTAINED, NOT_CONTAINED):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if (self.verdict == NOT_CONTAINED) != (self.witness is not None):
            raise ValueError("a witness must be given exactly for non-containment")

    @property
    def contained(self) -> bool:
        return self.verdict == CONTAINED

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.m, self.r)

    def recheck(self, I: MonomialIdeal | None = None) -> bool:
        """Re-verify the certificate by independent membership tests."""
        I = I if I is not None else self.ideal
        if I is None:
            raise ValueError("no ideal to check against")
        if self.contained:
            return not outside(power(I, self.r), symbolic_power(I, self.m))
        return (in_symbolic_power(I, self.m, self.witness)
                and not contains_monomial(power(I, self.r), self.witness))


def check_containment(I: MonomialIdeal, m: int, r: int) -> ContainmentCertificate:
    """Decide ``I^(m) ⊆ I^r`` generator by generator.

    The witness, if any, is the canonically least minimal generator of
    ``I^(m)`` outside ``I^r``.
    """
    if m < 1 or r < 1:
        raise ValueError("m and r must be >= 1")
    bad = outside(power(I, r), symbolic_power(I, m))
    if bad:
        return ContainmentCertificate(m, r, NOT_CONTAINED, bad[0], I)
    return ContainmentCertificate(m, r, CONTAINED, None, I)


@dataclass(frozen=True)
class Cell:
    contained: bool
    implied: bool = False


@dataclass
class ScanReport:
    """Verdicts on the grid ``1 <= m <= max_m, 1 <= r <= max_r``.

    ``best_ratio`` is the largest ``m/r`` over non-contained cells and is a
    certified lower bound for the resurgence, not its value.
    """

    max_m: int
    max_r: int
    cells: dict[tuple[int, int], Cell]
    best_ratio: Fraction | None
    best_cells: list[tuple[int, int]]
    witnesses: dict[tuple[int, int], Monomial] = field(default_factory=dict)
    ideal: MonomialIdeal | None = None

    note = "best_ratio is a certified lower bound for the resurgence; the supremum may not be attained"

    def verdicts(self) -> dict[tuple[int, int], bool]:
        return {k: c.contained for k, c in self.cells.items()}

    def not_contained(self) -> list[tuple[int, int]]:
        return [k for k, c in sorted(self.cells.items()) if not c.contained]

    def computed(self) -> int:
        return sum(1 for c in self.cells.values() if not c.implied)


def scan(I: MonomialIdeal, max_m: int, max_r: int, *, shortcuts: bool = True,
         threads: int = 1) -> ScanReport:
    """Check containment on the whole grid, increasing m then r.

    With ``shortcuts``, containment at (m, r) is propagated to (m + 1, r) and
    non-containment at (m, r) to (m, r + 1).  ``threads > 1`` only prefetches
    the symbolic and ordinary powers in parallel; the sweep itself stays
    sequential, so the report does not depend on scheduling.
    """
    if max_m < 1 or max_r < 1:
        raise ValueError("grid bounds must be >= 1")
    if not I.is_proper_nonzero():
        raise ImproperIdealError(f"scan needs a proper nonzero ideal, got {I}")
    if threads > 1:
        jobs = [(symbolic_power, m) for m in range(1, max_m + 1)]
        jobs += [(power, r) for r in range(1, max_r + 1)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda job: job[0](I, job[1]), jobs))

    cells: dict[tuple[int, int], Cell] = {}
    for m in range(1, max_m + 1):
        for r in range(1, max_r + 1):
            if shortcuts:
                above = cells.get((m - 1, r))
                left = cells.get((m, r - 1))
                if above is not None and above.contained:
                    cells[m, r] = Cell(True, implied=True)
                    continue
                if left is not None and not left.contained:
                    cells[m, r] = Cell(False, implied=True)
                    continue
            cells[m, r] = Cell(check_containment(I, m, r).contained)

    bad = [k for k, c in cells.items() if not c.contained]
    if not bad:
        return ScanReport(max_m, max_r, cells, None, [], {}, I)
    best = max(Fraction(m, r) for m, r in bad)
    best_cells = sorted(k for k in bad if Fraction(*k) == best)
    witnesses = {k: check_containment(I, *k).witness for k in best_cells}
    return ScanReport(max_m, max_r, cells, best, best_cells, witnesses, I)


def product_witness(parts: Sequence[tuple[MonomialIdeal, int, int, Monomial]]
                    ) -> ContainmentCertificate:
    """Combine local non-containments ``f_i ∈ I_i^(m_i) \\ I_i^(r_i)`` into
    ``Π f_i ∈ P^(Σ m_i) \\ P^(Σ r_i - p + 1)`` for ``P = Σ I_i``.

    The ideals either come from rings with disjoint variable names (they are
    then placed side by side) or already share one ring on disjoint supports.
    """
    if len(parts) < 1:
        raise ValueError("no parts given")
    for k, (I, m, r, f) in enumerate(parts):
        if f.ring != I.ring:
            raise CertificateError(f"part {k}: witness {f} is not in the ring of {I}")
        if not in_symbolic_power(I, m, f) or not contains_monomial(symbolic_power(I, m), f):
            raise CertificateError(f"part {k}: {f} is not in the symbolic power {m} of {I}")
        if contains_monomial(power(I, r), f):
            raise CertificateError(f"part {k}: {f} lies in the ordinary power {r} of {I}")

    rings = [I.ring for I, *_ in parts]
    if all(ring == rings[0] for ring in rings):
        ring = rings[0]
        supports = [I.support() for I, *_ in parts]
        for a, b in itertools.combinations(range(len(parts)), 2):
            if supports[a] & supports[b]:
                raise RingMismatchError(f"parts {a} and {b} share variables")
        P = parts[0][0]
        for I, *_ in parts[1:]:
            P = P + I
        witness = ring.one()
        for _, _, _, f in parts:
            witness = witness * f
    else:
        P = disjoint_sum(*(I for I, *_ in parts))
        witness, offset = P.ring.one(), 0
        for I, _, _, f in parts:
            witness = witness * embed_monomial(f, P.ring, offset)
            offset += len(I.ring)

    m = sum(p[1] for p in parts)
    r = sum(p[2] for p in parts) - len(parts) + 1
    cert = ContainmentCertificate(m, r, NOT_CONTAINED, witness, P)
    if not cert.recheck():
        raise CertificateError(f"combined witness {witness} failed direct verification")
    return cert


@dataclass(frozen=True)
class BoundReport:
    a: Fraction
    b: Fraction
    bound: Fraction
    rule: str

    @property
    def collapses(self) -> bool:
        return self.rule == COLLAPSE


COLLAPSE = "max: larger value at least twice the smaller"
TWO_THIRDS = "two-thirds of the sum"


def _as_fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def sharp_sum_bound(a, b) -> BoundReport:
    """Upper bound ``max{a, b, 2(a+b)/3}`` for the resurgence of a sum of ideals
    in disjoint variables whose resurgences are a and b."""
    a, b = _as_fraction(a), _as_fraction(b)
    if a < 1 or b < 1:
        raise ValueError("resurgence values are at least 1")
    bound = max(a, b, Fraction(2) * (a + b) / 3)
    rule = COLLAPSE if max(a, b) >= 2 * min(a, b) else TWO_THIRDS
    return BoundReport(a, b, bound, rule)


def closed_form_max(a, b) -> Fraction:
    a, b = _as_fraction(a), _as_fraction(b)
    return max(a, b, Fraction(2) * (a + b) / 3)


def evaluate_max_sup(a, b, n_max: int) -> tuple[Fraction, Fraction]:
    """Enumerate ``max{a, b, (ma + nb)/(m + n - 1)}`` over ``2 <= m, n <= n_max``
    and return it with the closed form ``max{a, b, 2(a+b)/3}``."""
    a, b = _as_fraction(a), _as_fraction(b)
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    # integer cross-multiplication keeps the inner loop cheap
    pa, qa, pb, qb = a.numerator, a.denominator, b.numerator, b.denominator
    x, y, q = pa * qb, pb * qa, qa * qb
    best_num, best_den = 0, 1
    for m in range(2, n_max + 1):
        for n in range(2, n_max + 1):
            num, den = m * x + n * y, q * (m + n - 1)
            if num * best_den > best_num * den:
                best_num, best_den = num, den
    enumerated = max(a, b, Fraction(best_num, best_den))
    closed = closed_form_max(a, b)
    if enumerated > closed:
        raise AssertionError(f"enumerated {enumerated} exceeds closed form {closed}")
    return enumerated, closed


def iterated_sum_bound(a, d_max: int) -> list[Fraction]:
    """Upper bounds for the resurgence of the iterated sums ``I^[1..d_max]``."""
    a = _as_fraction(a)
    if a < 1:
        raise ValueError("a must be >= 1")
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    out = [a]
    while len(out) < d_max:
        out.append(closed_form_max(a, out[-1]))
    for k, v in enumerate(out, 1):
        if not v < 2 * a:
            raise AssertionError(f"bound {v} at step {k} is not below {2 * a}")
    return out


def rho_a_star_configuration(m: int, d: int) -> Fraction:
    """Reference value ``m(d - m + 1)/d`` of the asymptotic resurgence of
    ``I_{m,d}`` (quoted, not computed)."""
    if not 1 <= m <= d:
        raise ValueError(f"need 1 <= m <= d, got m={m}, d={d}")
    return Fraction(m * (d - m + 1), d)


def rho_a_sum_reference(values) -> Fraction:
    """Asymptotic resurgence of a sum in disjoint variables: the maximum."""
    values = [_as_fraction(v) for v in values]
    if not values:
        raise ValueError("no values given")
    return max(values)


def res_set_11(n_max: int) -> set[Fraction]:
    """The values ``{1} ∪ {(n+1)/n : 3 <= n <= n_max}``."""
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    return {Fraction(1)} | {Fraction(n + 1, n) for n in range(3, n_max + 1)}

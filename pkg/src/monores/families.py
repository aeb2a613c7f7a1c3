"""Constructors for the ideal families studied here, and the F_d oracles.

``F_d = (x^(2d+1), x^(2d-1)*y^2, y^(2d+1)*z)`` has resurgence 1 but its first
non-trivial symbolic power only shows up at ``n = d + 1``.  Star configuration
ideals ``I_{m,d}`` and their three-fold sums ``P_m`` supply the large-gap
examples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import RingMismatchError
from .ideal import MonomialIdeal, add, mul, power
from .monomial import Monomial, RingContext


def family_F(d: int, names=("x", "y", "z")) -> MonomialIdeal:
    """``(x^(2d+1), x^(2d-1)*y^2, y^(2d+1)*z)`` in a fresh three-variable ring."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    ring = RingContext(names)
    return MonomialIdeal(ring, [(2 * d + 1, 0, 0), (2 * d - 1, 2, 0), (0, 2 * d + 1, 1)])


def star_ideal(m: int, d: int, prefix: str = "x") -> MonomialIdeal:
    """All squarefree monomials of degree ``d - m + 1`` in ``x1, ..., xd``."""
    if not 1 <= m <= d:
        raise ValueError(f"need 1 <= m <= d, got m={m}, d={d}")
    ring = RingContext(f"{prefix}{i}" for i in range(1, d + 1))
    rows = []
    for subset in itertools.combinations(range(d), d - m + 1):
        row = [0] * d
        for i in subset:
            row[i] = 1
        rows.append(row)
    return MonomialIdeal(ring, rows)


def star_primes(m: int, d: int, ring: RingContext) -> list[MonomialIdeal]:
    """The ``C(d, m)`` primes generated by m of the d variables."""
    out = []
    for subset in itertools.combinations(range(d), m):
        rows = np.zeros((m, d), dtype=np.int64)
        rows[np.arange(m), list(subset)] = 1
        out.append(MonomialIdeal._from_matrix(ring, rows))
    return out


def _copy_name(name: str, k: int) -> str:
    return f"{name}_{k}" if name[-1].isdigit() else f"{name}{k}"


def embed(I: MonomialIdeal, ring: RingContext, offset: int) -> MonomialIdeal:
    """Place I's variables at positions ``offset, offset + 1, ...`` of ``ring``."""
    d = len(I.ring)
    if offset < 0 or offset + d > len(ring):
        raise ValueError("embedding does not fit in the target ring")
    rows = np.zeros((I.ngens, len(ring)), dtype=np.int64)
    rows[:, offset:offset + d] = I.matrix
    return MonomialIdeal._from_matrix(ring, rows, canonical=True)


def embed_monomial(f: Monomial, ring: RingContext, offset: int) -> Monomial:
    exps = [0] * len(ring)
    exps[offset:offset + len(f.ring)] = f.exponents
    return Monomial(ring, exps)


def disjoint_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Sum of ideals from rings with pairwise disjoint variable names, in the
    concatenated ring."""
    if not ideals:
        raise ValueError("nothing to sum")
    names = [v for I in ideals for v in I.ring.variables]
    if len(set(names)) != len(names):
        raise RingMismatchError("rings share variable names; rename one copy first")
    ring = RingContext(names)
    total, offset = None, 0
    for I in ideals:
        J = embed(I, ring, offset)
        total = J if total is None else add(total, J)
        offset += len(I.ring)
    return total


def rename(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Copy of I with the block index k appended to every variable name."""
    ring = RingContext(_copy_name(v, k) for v in I.ring.variables)
    return MonomialIdeal._from_matrix(ring, I.matrix, canonical=True)


def iterated_sum(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I^[k]``: k renamed copies of I summed in a ring with ``k * d`` variables.

    >>> from monores.parser import parse_ideal
    >>> print(iterated_sum(parse_ideal("x,y", "(x^2, x*y)"), 2))
    (x1^2, x1*y1, x2^2, x2*y2)
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return disjoint_sum(*(rename(I, j) for j in range(1, k + 1)))


def pm_ideal(m: int) -> MonomialIdeal:
    """Three disjoint copies of ``I_{m, 2m-1}``: ``x3_2`` is variable 3 of block 2."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return iterated_sum(star_ideal(m, 2 * m - 1), 3)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class FdMembershipSystem:
    """Integer system deciding ``x^a y^b z^c ∈ F_d^n``.

    Unknowns p, q >= 0 with ``n - c <= p + q <= n`` and
    ``(2d+1)n - b <= (2d+1)p + (2d-1)q <= a``.
    """

    d: int
    n: int
    a: int
    b: int
    c: int

    def q_range(self, p: int) -> range:
        """Admissible q for a given p (empty range when none)."""
        d, n, a, b, c = self.d, self.n, self.a, self.b, self.c
        lo = max(0, n - c - p, _ceil_div((2 * d + 1) * n - b - (2 * d + 1) * p, 2 * d - 1))
        hi = min(n - p, (a - (2 * d + 1) * p) // (2 * d - 1))
        return range(lo, hi + 1)

    def solutions(self):
        for p in range(self.n + 1):
            for q in self.q_range(p):
                yield p, q

    def is_solvable(self) -> bool:
        return any(len(self.q_range(p)) for p in range(self.n + 1))


def fd_membership_oracle(d: int, n: int, mono: Monomial) -> bool:
    """Decide ``mono ∈ F_d^n`` from the (p, q) system, O(n) per query."""
    if d < 1 or n < 1:
        raise ValueError("d and n must be >= 1")
    if len(mono.ring) != 3:
        raise RingMismatchError(f"expected a monomial in three variables, got {mono.ring!r}")
    a, b, c = mono.exponents
    return FdMembershipSystem(d, n, a, b, c).is_solvable()


def fd_shift(d: int, ring: RingContext | None = None) -> Monomial:
    """``(x^d y)^(2d+1)``, the extra generator of ``F_d^(d+1)``."""
    ring = ring or family_F(d).ring
    return Monomial(ring, (d * (2 * d + 1), 2 * d + 1, 0))


def fd_symbolic_closed_form(d: int, n: int) -> MonomialIdeal:
    """``F_d^n`` for ``n <= d``, else ``F_d^n + (x^d y)^(2d+1) F_d^(n-d-1)``."""
    if d < 1 or n < 1:
        raise ValueError("d and n must be >= 1")
    F = family_F(d)
    Fn = power(F, n)
    if n <= d:
        return Fn
    shift = MonomialIdeal(F.ring, [fd_shift(d, F.ring)])
    return add(Fn, mul(shift, power(F, n - d - 1)))

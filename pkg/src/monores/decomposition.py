"""Irreducible and primary decompositions, associated primes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ImproperIdealError
from .ideal import MonomialIdeal, contains_ideal, intersect_all
from .monomial import RingContext


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime generated by a non-empty set of variables."""

    ring: RingContext
    vars: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(self.vars)))
        if not vs:
            raise ValueError("a monomial prime needs at least one variable")
        object.__setattr__(self, "vars", vs)

    def ideal(self) -> MonomialIdeal:
        rows = np.zeros((len(self.vars), len(self.ring)), dtype=np.int64)
        rows[np.arange(len(self.vars)), list(self.vars)] = 1
        return MonomialIdeal._from_matrix(self.ring, rows)

    def complement(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.ring)) if i not in self.vars)

    def sort_key(self) -> tuple:
        return (len(self.vars), self.vars)

    def __le__(self, other: PrimeSupport) -> bool:
        return set(self.vars) <= set(other.vars)

    def __lt__(self, other: PrimeSupport) -> bool:
        return set(self.vars) < set(other.vars)

    def __str__(self) -> str:
        return "(" + ", ".join(self.ring.variables[i] for i in self.vars) + ")"


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure powers, ``assignments`` = ((var, exponent), ...)."""

    ring: RingContext
    assignments: tuple[tuple[int, int], ...]

    def __post_init__(self):
        asg = tuple(sorted((int(v), int(e)) for v, e in self.assignments))
        if not asg:
            raise ValueError("an irreducible component needs at least one assignment")
        if any(e < 1 for _, e in asg) or len({v for v, _ in asg}) != len(asg):
            raise ValueError(f"bad assignments {asg}")
        object.__setattr__(self, "assignments", asg)

    def ideal(self) -> MonomialIdeal:
        rows = np.zeros((len(self.assignments), len(self.ring)), dtype=np.int64)
        for k, (v, e) in enumerate(self.assignments):
            rows[k, v] = e
        return MonomialIdeal._from_matrix(self.ring, rows)

    @property
    def prime(self) -> PrimeSupport:
        return PrimeSupport(self.ring, tuple(v for v, _ in self.assignments))

    def sort_key(self) -> tuple:
        return (len(self.assignments), self.assignments)

    def __str__(self) -> str:
        return str(self.ideal())


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise ImproperIdealError("the zero ideal has no decomposition here")
    if I.is_unit():
        raise ImproperIdealError("the unit ideal has no decomposition")


@lru_cache(maxsize=4096)
def _split(I: MonomialIdeal) -> frozenset:
    """Irreducible components of I (as assignment tuples), pruned only by
    pairwise containment."""
    gens = I.matrix
    nsupp = (gens > 0).sum(axis=1)
    if (nsupp <= 1).all():
        return frozenset({tuple((int(np.flatnonzero(row)[0]), int(row.max())) for row in gens)})
    # pivot: the generator with the most variables (first in canonical order
    # on ties), split at its largest exponent (earliest variable on ties)
    k = int(np.argmax(nsupp))
    g = gens[k]
    i = int(np.argmax(g))
    pure = np.zeros_like(g)
    pure[i] = g[i]
    rest = g.copy()
    rest[i] = 0
    others = np.delete(gens, k, axis=0)
    left = MonomialIdeal._from_matrix(I.ring, np.vstack([others, pure]))
    right = MonomialIdeal._from_matrix(I.ring, np.vstack([others, rest]))
    return _prune(_split(left) | _split(right))


def _contains_component(big: tuple, small: tuple) -> bool:
    # (x_i^{a_i}) ⊇ (x_j^{b_j}) iff every x_j^{b_j} is divisible by some x_i^{a_i}
    bd = dict(big)
    return all(v in bd and bd[v] <= e for v, e in small)


def _prune(comps: frozenset) -> frozenset:
    keep = []
    for c in sorted(comps, key=lambda c: (len(c), c)):
        if not any(_contains_component(c, k) for k in keep):
            keep.append(c)
    return frozenset(keep)


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant decomposition of I into ideals generated by pure powers.

    >>> from monores.parser import parse_ideal
    >>> I = parse_ideal("x,y,z", "(x^3, x*y^2, y^3*z)")
    >>> [str(c) for c in irreducible_decomposition(I)]
    ['(x, y^3)', '(x, z)', '(y^2, x^3)']
    """
    _require_proper(I)
    comps = sorted((IrreducibleComponent(I.ring, c) for c in _split(I)),
                   key=IrreducibleComponent.sort_key)
    ideals = [c.ideal() for c in comps]
    # explicit irredundancy pass: drop anything containing the intersection of the rest
    k = 0
    while k < len(comps) and len(comps) > 1:
        rest = ideals[:k] + ideals[k + 1:]
        if contains_ideal(ideals[k], intersect_all(rest)):
            del comps[k], ideals[k]
        else:
            k += 1
    if intersect_all(ideals) != I:
        raise AssertionError(f"decomposition of {I} does not re-intersect to it")
    return comps


def associated_primes(I: MonomialIdeal) -> list[PrimeSupport]:
    """Radicals of the irreducible components, deduplicated, sorted."""
    primes = {c.prime for c in irreducible_decomposition(I)}
    return sorted(primes, key=PrimeSupport.sort_key)


def maximal_associated_primes(I: MonomialIdeal) -> list[PrimeSupport]:
    primes = associated_primes(I)
    return [p for p in primes if not any(p < q for q in primes)]


def primary_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Group irreducible components by radical and intersect each group.

    The result is sorted by the associated prime of each component.
    """
    groups: dict[PrimeSupport, list[MonomialIdeal]] = {}
    for c in irreducible_decomposition(I):
        groups.setdefault(c.prime, []).append(c.ideal())
    primes = sorted(groups, key=PrimeSupport.sort_key)
    comps = [intersect_all(groups[p]) for p in primes]
    k = 0
    while k < len(comps) and len(comps) > 1:
        if contains_ideal(comps[k], intersect_all(comps[:k] + comps[k + 1:])):
            del comps[k]
        else:
            k += 1
    return comps

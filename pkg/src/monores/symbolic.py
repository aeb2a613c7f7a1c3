"""Symbolic powers via associated primes, and the block-sum expansion."""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from .decomposition import maximal_associated_primes
from .errors import ImproperIdealError, RingMismatchError
from .ideal import (MonomialIdeal, add, intersect_all, mul, power, saturate)
from .monomial import Monomial


class _KeyedCache:
    """Memo table where each key is computed once, even under threads."""

    def __init__(self):
        self._data = {}
        self._locks = {}
        self._guard = threading.Lock()

    def get(self, key, compute):
        with self._guard:
            if key in self._data:
                return self._data[key]
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            with self._guard:
                if key in self._data:
                    return self._data[key]
            value = compute()
            with self._guard:
                self._data[key] = value
                self._locks.pop(key, None)
            return value

    def clear(self):
        with self._guard:
            self._data.clear()


_symbolic_cache = _KeyedCache()


def clear_caches() -> None:
    from . import decomposition, ideal
    _symbolic_cache.clear()
    decomposition._split.cache_clear()
    with ideal._power_lock:
        ideal._power_cache.clear()


def _require_proper(I: MonomialIdeal) -> None:
    if not I.is_proper_nonzero():
        raise ImproperIdealError(f"symbolic powers need a proper nonzero ideal, got {I}")


def symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^(n)``: contract ``I^n`` from the localization at every associated prime.

    Only maximal associated primes are visited: contracting at a smaller prime
    saturates by more variables and so gives a larger ideal.  For a monomial
    prime p the contraction equals the saturation of ``I^n`` by the variables
    outside p.
    """
    _require_proper(I)
    n = int(n)
    if n < 1:
        raise ValueError("symbolic powers are defined for n >= 1")
    return _symbolic_cache.get((I, n), lambda: _symbolic_power(I, n))


def _symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    In = power(I, n)
    parts = []
    for p in maximal_associated_primes(I):
        out = p.complement()
        parts.append(saturate(In, out) if out else In)
    return intersect_all(parts)


def in_symbolic_power(I: MonomialIdeal, n: int, f: Monomial) -> bool:
    """Membership ``f ∈ I^(n)`` without forming the intersection.

    ``f`` lies in the saturation of ``I^n`` away from a prime p exactly when some
    generator of ``I^n``, restricted to the variables of p, divides ``f``
    restricted to those variables.
    """
    _require_proper(I)
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring!r} vs {I.ring!r}")
    gens = power(I, n).matrix
    fv = np.array(f.exponents)
    for p in maximal_associated_primes(I):
        cols = list(p.vars)
        if not (gens[:, cols] <= fv[cols]).all(axis=1).any():
            return False
    return True


@dataclass(frozen=True)
class BlockPartition:
    """Ideals on pairwise disjoint variable sets whose sum is the original ideal."""

    blocks: tuple[tuple[MonomialIdeal, frozenset], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for J, vs in self.blocks:
            if not J.support() <= vs:
                raise ValueError(f"block ideal {J} leaves its variables {sorted(vs)}")
            if seen & vs:
                raise ValueError("blocks overlap")
            seen |= vs

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def ideals(self) -> list[MonomialIdeal]:
        return [J for J, _ in self.blocks]

    def total(self) -> MonomialIdeal:
        out = self.blocks[0][0]
        for J in self.ideals[1:]:
            out = add(out, J)
        return out


def detect_blocks(I: MonomialIdeal) -> BlockPartition:
    """Split I along the connected components of the variable co-occurrence graph."""
    _require_proper(I)
    d = len(I.ring)
    parent = list(range(d))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for row in I.matrix:
        vs = np.flatnonzero(row)
        for v in vs[1:]:
            a, b = find(int(vs[0])), find(int(v))
            if a != b:
                parent[max(a, b)] = min(a, b)
    used = sorted(I.support())
    comps: dict[int, set[int]] = {}
    for v in used:
        comps.setdefault(find(v), set()).add(v)
    blocks = []
    for root in sorted(comps, key=lambda r: min(comps[r])):
        vs = frozenset(comps[root])
        rows = I.matrix[(I.matrix[:, sorted(vs)] > 0).any(axis=1)]
        blocks.append((MonomialIdeal._from_matrix(I.ring, rows, canonical=True), vs))
    return BlockPartition(tuple(blocks))


def compositions(s: int, parts: int):
    """All tuples of ``parts`` non-negative integers summing to ``s``."""
    if parts == 1:
        yield (s,)
        return
    for first in range(s + 1):
        for rest in compositions(s - first, parts - 1):
            yield (first,) + rest


def symbolic_power_blockwise(P: BlockPartition, s: int) -> MonomialIdeal:
    """``(I_1 + ... + I_p)^(s)`` as the sum over compositions of s of the
    products ``I_1^(i_1) ... I_p^(i_p)``, with ``I^(0)`` the unit ideal."""
    if len(P) < 2:
        raise ValueError("a single block has no expansion; call symbolic_power instead")
    s = int(s)
    if s < 1:
        raise ValueError("s must be >= 1")
    ring = P.blocks[0][0].ring
    unit = MonomialIdeal.unit(ring)

    def sp(J, i):
        return unit if i == 0 else symbolic_power(J, i)

    terms = []
    for comp in compositions(s, len(P)):
        term = unit
        for J, i in zip(P.ideals, comp):
            term = mul(term, sp(J, i))
        terms.append(term.matrix)
    return MonomialIdeal._from_matrix(ring, np.concatenate(terms))


def expansion_terms(P: BlockPartition, s: int) -> int:
    """Number of summands in the expansion at level s."""
    return sum(1 for _ in compositions(s, len(P)))


"""Monomial ideals kept in canonical form.

Every :class:`MonomialIdeal` stores its minimal generators as a read-only
``(k, d)`` integer matrix, sorted by :func:`~monores.monomial.canonical_key`.
Two ideals are equal exactly when their matrices are equal, which makes
ideals usable as dictionary keys for the symbolic-power caches.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

import numpy as np

from .errors import ExponentOverflowError, RingMismatchError
from .monomial import MAX_EXPONENT, Monomial, RingContext, format_monomial

# Upper bound on the number of int64 cells in one broadcast divisibility test.
_CHUNK_CELLS = 1 << 22


def _check_overflow(arr: np.ndarray) -> np.ndarray:
    if arr.size and arr.max() > MAX_EXPONENT:
        raise ExponentOverflowError(
            f"exponent {int(arr.max())} exceeds the supported maximum {MAX_EXPONENT}")
    return arr


def _canonical_order(arr: np.ndarray) -> np.ndarray:
    # np.lexsort uses the last key as primary: degree, then -e_0, -e_1, ...
    keys = [-arr[:, j] for j in range(arr.shape[1] - 1, -1, -1)]
    keys.append(arr.sum(axis=1))
    return np.lexsort(keys)


def _divisible_mask(cands: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """mask[i] is True iff some row of ``gens`` divides ``cands[i]``."""
    out = np.zeros(len(cands), dtype=bool)
    if not len(gens) or not len(cands):
        return out
    step = max(1, _CHUNK_CELLS // (len(gens) * gens.shape[1] or 1))
    for lo in range(0, len(cands), step):
        block = cands[lo:lo + step]
        out[lo:lo + step] = (gens[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return out


def minimal_generators(arr: np.ndarray) -> np.ndarray:
    """Drop duplicates and non-minimal rows, return rows in canonical order."""
    arr = np.asarray(arr, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d exponent matrix")
    if len(arr) == 0:
        return arr.reshape(0, arr.shape[1])
    arr = np.unique(arr, axis=0)
    arr = arr[_canonical_order(arr)]
    deg = arr.sum(axis=1)
    # distinct monomials of equal degree never divide each other, so each
    # degree level only has to be screened against lower levels
    kept: list[np.ndarray] = []
    kept_all = arr[:0]
    starts = np.flatnonzero(np.r_[True, deg[1:] != deg[:-1]])
    ends = np.r_[starts[1:], len(arr)]
    for lo, hi in zip(starts, ends):
        level = arr[lo:hi]
        if len(kept_all):
            level = level[~_divisible_mask(level, kept_all)]
        if len(level):
            kept.append(level)
            kept_all = np.concatenate(kept)
    return kept_all


class MonomialIdeal:
    """An ideal generated by monomials, stored by its minimal generators."""

    __slots__ = ("_ring", "_gens", "_hash", "__weakref__")

    def __init__(self, ring: RingContext, generators: Iterable = ()):
        rows = []
        for g in generators:
            if isinstance(g, Monomial):
                if g.ring != ring:
                    raise RingMismatchError(f"generator {g} is not in {ring!r}")
                rows.append(g.exponents)
            else:
                rows.append(Monomial(ring, g).exponents)
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), len(ring))
        self._set(ring, minimal_generators(arr))

    def _set(self, ring: RingContext, arr: np.ndarray) -> None:
        arr.setflags(write=False)
        self._ring = ring
        self._gens = arr
        self._hash = None

    @classmethod
    def _from_matrix(cls, ring: RingContext, arr: np.ndarray, *, canonical: bool = False):
        obj = cls.__new__(cls)
        arr = np.asarray(arr, dtype=np.int64).reshape(-1, len(ring))
        obj._set(ring, arr if canonical else minimal_generators(arr))
        return obj

    @classmethod
    def zero(cls, ring: RingContext) -> MonomialIdeal:
        return cls._from_matrix(ring, np.zeros((0, len(ring)), dtype=np.int64), canonical=True)

    @classmethod
    def unit(cls, ring: RingContext) -> MonomialIdeal:
        return cls._from_matrix(ring, np.zeros((1, len(ring)), dtype=np.int64), canonical=True)

    # -- accessors ---------------------------------------------------------

    @property
    def ring(self) -> RingContext:
        return self._ring

    @property
    def matrix(self) -> np.ndarray:
        """Read-only ``(ngens, nvars)`` exponent matrix in canonical order."""
        return self._gens

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self._ring, row) for row in self._gens.tolist())

    @property
    def exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self._gens.tolist())

    @property
    def ngens(self) -> int:
        return len(self._gens)

    def is_zero(self) -> bool:
        return len(self._gens) == 0

    def is_unit(self) -> bool:
        return len(self._gens) == 1 and not self._gens.any()

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def support(self) -> frozenset[int]:
        """Indices of the variables that occur in some generator."""
        return frozenset(np.flatnonzero(self._gens.any(axis=0)).tolist())

    def max_exponent(self) -> int:
        return int(self._gens.max()) if self._gens.size else 0

    def __len__(self) -> int:
        return len(self._gens)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (self._ring == other._ring and self._gens.shape == other._gens.shape
                and bool((self._gens == other._gens).all()))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._ring, self._gens.shape, self._gens.tobytes()))
        return self._hash

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(format_monomial(self._ring, row)
                               for row in self._gens.tolist()) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self}"

    # -- operator sugar ----------------------------------------------------

    def __add__(self, other):
        return add(self, other) if isinstance(other, MonomialIdeal) else NotImplemented

    def __mul__(self, other):
        return mul(self, other) if isinstance(other, MonomialIdeal) else NotImplemented

    def __pow__(self, n):
        return power(self, n)

    def __and__(self, other):
        return intersect(self, other) if isinstance(other, MonomialIdeal) else NotImplemented

    def __contains__(self, m) -> bool:
        return contains_monomial(self, m)

    def __le__(self, other) -> bool:
        """Ideal containment ``self ⊆ other``."""
        return contains_ideal(other, self)

    def __ge__(self, other) -> bool:
        return contains_ideal(self, other)


def _same_ring(*ideals: MonomialIdeal) -> RingContext:
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring != ring:
            raise RingMismatchError(f"{ring!r} vs {other.ring!r}")
    return ring


def minimalize(gens: Sequence[Monomial], ring: RingContext | None = None) -> MonomialIdeal:
    """Canonical ideal generated by ``gens``; ``ring`` is needed only when empty."""
    if not gens:
        if ring is None:
            raise ValueError("cannot infer the ring of an empty generator list")
        return MonomialIdeal.zero(ring)
    ring = ring or gens[0].ring
    return MonomialIdeal(ring, gens)


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    return MonomialIdeal._from_matrix(ring, np.concatenate([I.matrix, J.matrix]))


def _products(A: np.ndarray, B: np.ndarray, op) -> np.ndarray:
    """Minimal rows of ``op(a, b)`` over all pairs, built chunk by chunk."""
    d = A.shape[1]
    if not len(A) or not len(B):
        return np.zeros((0, d), dtype=np.int64)
    step = max(1, _CHUNK_CELLS // (len(B) * d or 1))
    parts = []
    for lo in range(0, len(A), step):
        block = op(A[lo:lo + step, None, :], B[None, :, :]).reshape(-1, d)
        parts.append(minimal_generators(block))
    out = np.concatenate(parts)
    return out if len(parts) == 1 else minimal_generators(out)


def mul(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    prod = _products(I.matrix, J.matrix, np.add)
    return MonomialIdeal._from_matrix(ring, _check_overflow(prod), canonical=True)


_power_cache: dict[tuple[MonomialIdeal, int], MonomialIdeal] = {}
_power_lock = threading.Lock()


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^n`` by repeated multiplication, minimalizing after every stage.

    Powers are cached, so ``power(I, n)`` after ``power(I, n - 1)`` costs one
    product.
    """
    n = int(n)
    if n < 0:
        raise ValueError("negative ideal power")
    if n == 0:
        return MonomialIdeal.unit(I.ring)
    if n == 1:
        return I
    if n * I.max_exponent() > MAX_EXPONENT:
        raise ExponentOverflowError(
            f"power {n} of an ideal with exponent {I.max_exponent()} overflows")
    with _power_lock:
        hit = _power_cache.get((I, n))
    if hit is not None:
        return hit
    result = mul(power(I, n - 1), I)
    with _power_lock:
        _power_cache.setdefault((I, n), result)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    return MonomialIdeal._from_matrix(ring, _products(I.matrix, J.matrix, np.maximum),
                                      canonical=True)


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Left-to-right intersection of a non-empty sequence."""
    if not ideals:
        raise ValueError("empty intersection")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``I : m``, generated by ``f / gcd(f, m)`` for the generators f of I."""
    if m.ring != I.ring:
        raise RingMismatchError(f"{m.ring!r} vs {I.ring!r}")
    shift = np.array(m.exponents, dtype=np.int64)
    return MonomialIdeal._from_matrix(I.ring, np.maximum(I.matrix - shift, 0))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    return intersect_all([colon(I, g) for g in J.generators])


def saturate(I: MonomialIdeal, variables: Iterable[int]) -> MonomialIdeal:
    """``I : w^∞`` for ``w`` the product of the given variables.

    Iterates ``I <- I : w`` to a fixpoint.  Each step lowers the exponents of
    the chosen variables, so more than ``1 + max exponent`` steps means a bug.
    """
    idx = sorted(set(int(v) for v in variables))
    if not idx:
        raise ValueError("saturation needs at least one variable")
    for v in idx:
        if not 0 <= v < len(I.ring):
            raise IndexError(f"variable index {v} out of range")
    w = [0] * len(I.ring)
    for v in idx:
        w[v] = 1
    w = Monomial(I.ring, w)
    bound = 1 + I.max_exponent()
    current = I
    for _ in range(bound + 1):
        nxt = colon(current, w)
        if nxt == current:
            return current
        current = nxt
    raise RuntimeError(f"saturation did not stabilize within {bound} steps")


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._from_matrix(I.ring, (I.matrix > 0).astype(np.int64))


def contains_monomial(I: MonomialIdeal, m: Monomial) -> bool:
    if not isinstance(m, Monomial):
        raise TypeError(f"expected a Monomial, got {type(m).__name__}")
    if m.ring != I.ring:
        raise RingMismatchError(f"{m.ring!r} vs {I.ring!r}")
    if I.is_zero():
        return False
    return bool((I.matrix <= np.array(m.exponents)).all(axis=1).any())


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``J ⊆ I``."""
    _same_ring(I, J)
    return bool(_divisible_mask(J.matrix, I.matrix).all())


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return I == J


def outside(I: MonomialIdeal, J: MonomialIdeal) -> list[Monomial]:
    """Minimal generators of ``J`` that are not in ``I``, in canonical order."""
    _same_ring(I, J)
    rows = J.matrix[~_divisible_mask(J.matrix, I.matrix)]
    return [Monomial(J.ring, r) for r in rows.tolist()]

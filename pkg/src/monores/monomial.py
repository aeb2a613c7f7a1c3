"""Exponent-vector monomials over a fixed, ordered set of variables.

A :class:`RingContext` is just the ordered tuple of variable names; the
coefficient field never matters for monomial computations and is not
modelled.  A :class:`Monomial` is an immutable exponent vector tied to one
context.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ExponentOverflowError, RingMismatchError

# Exponents are checked against a 32-bit signed width; Python ints would
# never wrap, but a bound keeps runaway powers from silently eating memory.
MAX_EXPONENT = 2**31 - 1

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = {"ring", "cap"}


def check_exponent(value: int) -> int:
    if value < 0:
        raise ExponentOverflowError(f"negative exponent {value}")
    if value > MAX_EXPONENT:
        raise ExponentOverflowError(
            f"exponent {value} exceeds the supported maximum {MAX_EXPONENT}")
    return value


@dataclass(frozen=True)
class RingContext:
    """Ordered variable names of a polynomial ring k[x_1, ..., x_d]."""

    variables: tuple[str, ...]

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if name in _RESERVED:
                raise ValueError(f"{name!r} is a reserved word")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "variables", names)

    @classmethod
    def from_string(cls, text: str) -> RingContext:
        """Build a context from ``"x,y,z"`` (commas and/or whitespace)."""
        return cls(n for n in re.split(r"[\s,]+", text.strip()) if n)

    def __len__(self) -> int:
        return len(self.variables)

    def __iter__(self):
        return iter(self.variables)

    def __repr__(self) -> str:
        return f"RingContext({', '.join(self.variables)})"

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in ring "
                           f"{', '.join(self.variables)}") from None

    def one(self) -> Monomial:
        return Monomial(self, (0,) * len(self))

    def var(self, name: str) -> Monomial:
        exps = [0] * len(self)
        exps[self.index(name)] = 1
        return Monomial(self, exps)

    def gens(self) -> tuple[Monomial, ...]:
        return tuple(self.var(n) for n in self.variables)

    def monomial(self, *exponents: int, **powers: int) -> Monomial:
        """``ring.monomial(3, 2, 0)`` or ``ring.monomial(x=3, y=2)``."""
        if exponents and powers:
            raise TypeError("give either positional exponents or keyword powers")
        if powers:
            exps = [0] * len(self)
            for name, e in powers.items():
                exps[self.index(name)] = e
            return Monomial(self, exps)
        return Monomial(self, exponents)


def canonical_key(exponents: Sequence[int]) -> tuple:
    """Sort key of the canonical order: total degree first, then lex with
    earlier variables heavier, so ``x^2, x*y, y^2`` comes out in that order."""
    return (sum(exponents), tuple(-e for e in exponents))


@dataclass(frozen=True)
class Monomial:
    ring: RingContext
    exponents: tuple[int, ...]

    def __init__(self, ring: RingContext, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if len(exps) != len(ring):
            raise ValueError(f"expected {len(ring)} exponents, got {len(exps)}")
        for e in exps:
            check_exponent(e)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def sort_key(self) -> tuple:
        return canonical_key(self.exponents)

    def _check(self, other: Monomial) -> None:
        if not isinstance(other, Monomial):
            raise TypeError(f"expected a Monomial, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(self.ring, map(max, self.exponents, other.exponents))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(self.ring, map(min, self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        self._check(other)
        return Monomial(self.ring, (a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, n: int) -> Monomial:
        if n < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(self.ring, (e * n for e in self.exponents))

    def __truediv__(self, other: Monomial) -> Monomial:
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        self._check(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.ring, (a - b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return format_monomial(self.ring, self.exponents)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def format_monomial(ring: RingContext, exponents: Sequence[int]) -> str:
    parts = []
    for name, e in zip(ring.variables, exponents):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# Free-function forms of the lattice operations.

def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return a.gcd(b)


def mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b

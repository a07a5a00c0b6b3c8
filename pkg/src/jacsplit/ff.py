"""Exact arithmetic in F_p and in its quadratic extension L = F_p[t]/(t^2 - n).

Every value is a :class:`FieldElement` of L; the prime subfield is the set of
elements with ``c1 == 0``.  Elements are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from sympy import isprime

from .errors import BadModulus, DivisionByZero, NonSquare

@dataclass(frozen=True)
class FieldParams:
    """The working tower F_p ⊂ L.  Use :func:`field` to construct."""

    p: int
    nonresidue: int

    def __post_init__(self):
        if self.p < 3 or not isprime(self.p):
            raise BadModulus(f"modulus must be an odd prime, got {self.p}")
        if pow(self.nonresidue, (self.p - 1) // 2, self.p) != self.p - 1:
            raise BadModulus(f"{self.nonresidue} is a square mod {self.p}")

    @property
    def order(self) -> int:
        """Size of L."""
        return self.p * self.p

    def __call__(self, c0: int, c1: int = 0) -> FieldElement:
        return FieldElement(self, c0 % self.p, c1 % self.p)

    @cached_property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0, 0)

    @cached_property
    def one(self) -> FieldElement:
        return FieldElement(self, 1, 0)

    @cached_property
    def t(self) -> FieldElement:
        """The adjoined square root of the non-residue."""
        return FieldElement(self, 0, 1)

    def elements(self) -> Iterator[FieldElement]:
        """All of L, ordered by (c1, c0)."""
        p = self.p
        for c1 in range(p):
            for c0 in range(p):
                yield FieldElement(self, c0, c1)

    def prime_elements(self) -> Iterator[FieldElement]:
        for c0 in range(self.p):
            yield FieldElement(self, c0, 0)

    @cached_property
    def _ts_data(self):
        # Tonelli-Shanks constants for the cyclic group L*
        q1 = self.order - 1
        s = (q1 & -q1).bit_length() - 1
        odd = q1 >> s
        half = q1 // 2
        z = next(x for x in self.elements() if x and x ** half == -self.one)
        return s, odd, z ** odd


@lru_cache(maxsize=None)
def field(p: int) -> FieldParams:
    """Return the tower for ``p`` with the smallest positive non-residue."""
    if p < 3 or not isprime(p):
        raise BadModulus(f"modulus must be an odd prime, got {p}")
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    return FieldParams(p, n)


class FieldElement:
    """c0 + c1·t in L, with 0 <= c0, c1 < p."""

    __slots__ = ("F", "c0", "c1")

    def __init__(self, F: FieldParams, c0: int, c1: int = 0):
        self.F = F
        self.c0 = c0
        self.c1 = c1

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, int):
            return FieldElement(self.F, other % self.F.p, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.F.p
        return FieldElement(self.F, (self.c0 + other.c0) % p, (self.c1 + other.c1) % p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.F.p
        return FieldElement(self.F, (self.c0 - other.c0) % p, (self.c1 - other.c1) % p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        p = self.F.p
        return FieldElement(self.F, -self.c0 % p, -self.c1 % p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.F
        a0, a1, b0, b1 = self.c0, self.c1, other.c0, other.c1
        if not (a1 or b1):
            return FieldElement(F, a0 * b0 % F.p, 0)
        return FieldElement(
            F,
            (a0 * b0 + F.nonresidue * a1 * b1) % F.p,
            (a0 * b1 + a1 * b0) % F.p,
        )

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        F = self.F
        p = F.p
        if not self.c1:
            if not self.c0:
                raise DivisionByZero("inverse of zero")
            return FieldElement(F, pow(self.c0, -1, p), 0)
        norm = (self.c0 * self.c0 - F.nonresidue * self.c1 * self.c1) % p
        ninv = pow(norm, -1, p)
        return FieldElement(F, self.c0 * ninv % p, -self.c1 * ninv % p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inv() ** -e
        acc = self.F.one
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __bool__(self):
        return bool(self.c0 or self.c1)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.c0 == other.c0 and self.c1 == other.c1 and self.F.p == other.F.p
        if isinstance(other, int):
            return self.c1 == 0 and self.c0 == other % self.F.p
        return NotImplemented

    def __hash__(self):
        return hash((self.c0, self.c1, self.F.p))

    def __repr__(self):
        if not self.c1:
            return str(self.c0)
        if not self.c0:
            return f"{self.c1}t"
        return f"{self.c0}+{self.c1}t"

    @property
    def is_prime_field(self) -> bool:
        return self.c1 == 0

    def sort_key(self) -> tuple[int, int]:
        return (self.c1, self.c0)


def is_square(x: FieldElement) -> bool:
    """True iff x has a square root in L."""
    return not x or x ** ((x.F.order - 1) // 2) == 1


def is_square_in_prime_subfield(x: FieldElement) -> bool:
    """Euler's criterion in F_p; x must lie in the prime subfield."""
    if x.c1:
        raise ValueError(f"{x!r} is not in the prime subfield")
    p = x.F.p
    return x.c0 == 0 or pow(x.c0, (p - 1) // 2, p) == 1


def _canonical_pair(y: FieldElement) -> tuple[FieldElement, FieldElement]:
    ny = -y
    return (y, ny) if y.sort_key() <= ny.sort_key() else (ny, y)


def sqrt(x: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Both square roots of x in L, the (c1, c0)-lexicographically smaller first.

    Tonelli-Shanks over the cyclic group L* of order p^2 - 1.
    """
    if not x:
        return x, x
    F = x.F
    if not is_square(x):
        raise NonSquare(f"{x!r} is not a square in F_{F.p}^2")
    s, odd, c = F._ts_data
    m = s
    tt = x ** odd
    r = x ** ((odd + 1) // 2)
    while tt != 1:
        i, t2 = 0, tt
        while t2 != 1:
            t2 = t2 * t2
            i += 1
        b = c ** (1 << (m - i - 1))
        m = i
        c = b * b
        tt = tt * c
        r = r * b
    return _canonical_pair(r)


def sqrt_exhaustive(x: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Square roots by scanning all of L.  Slow; a test oracle for :func:`sqrt`."""
    if x.F.order >= 10**6:
        raise ValueError("field too large for exhaustive search")
    for y in x.F.elements():
        if y * y == x:
            return _canonical_pair(y)
    raise NonSquare(f"{x!r} is not a square in F_{x.F.p}^2")

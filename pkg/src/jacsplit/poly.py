"""Dense univariate polynomials over L.

Coefficients are stored lowest degree first with trailing zeros stripped, so
the zero polynomial has an empty coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import DivisionByZero, ZeroPolynomial
from .ff import FieldElement, FieldParams

NEG_INF = -math.inf


def _strip(cs: list) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


class Poly:
    __slots__ = ("F", "coeffs")

    def __init__(self, F: FieldParams, coeffs: Iterable = ()):
        self.F = F
        self.coeffs = _strip([c if isinstance(c, FieldElement) else F(c) for c in coeffs])

    @classmethod
    def _raw(cls, F: FieldParams, coeffs: list) -> Poly:
        # coeffs already FieldElements
        obj = cls.__new__(cls)
        obj.F = F
        obj.coeffs = _strip(coeffs)
        return obj

    @classmethod
    def zero(cls, F: FieldParams) -> Poly:
        return cls._raw(F, [])

    @classmethod
    def one(cls, F: FieldParams) -> Poly:
        return cls._raw(F, [F.one])

    @classmethod
    def const(cls, F: FieldParams, c) -> Poly:
        return cls(F, [c])

    @classmethod
    def x(cls, F: FieldParams) -> Poly:
        return cls._raw(F, [F.zero, F.one])

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.F.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.F.zero

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly(self.F, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(self.F, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.F, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.F)
        out = [self.F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._raw(self.F, out)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        if isinstance(c, int):
            c = self.F(c)
        return Poly._raw(self.F, [c * x for x in self.coeffs])

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        acc = Poly.one(self.F)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __call__(self, at) -> FieldElement:
        if isinstance(at, int):
            at = self.F(at)
        acc = self.F.zero
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    eval = __call__

    def derivative(self) -> Poly:
        return Poly._raw(self.F, [c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> Poly:
        if not self.coeffs:
            raise ZeroPolynomial("cannot monicize the zero polynomial")
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return self.scale(lc.inv())

    def divrem(self, other: Poly) -> tuple[Poly, Poly]:
        """Return (q, r) with self = q*other + r and deg r < deg other."""
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        F = self.F
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(r) <= db:
            return Poly.zero(F), self
        inv_lc = b[-1].inv()
        q = [F.zero] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                continue
            c = c * inv_lc
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] = r[k - db + j] - c * b[j]
        return Poly._raw(F, q), Poly._raw(F, r[:db])

    __divmod__ = divrem

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divrem(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divrem(other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divrem(other)
        if r:
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self.coeffs == Poly(self.F, [other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = f"({c!r})" if c.c1 else repr(c)
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{cs}*{mono}")
            else:
                terms.append(cs)
        return " + ".join(terms)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if not a and not b:
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (d, s, t) with d = s*a + t*b and d the monic gcd."""
    if not a and not b:
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    F = a.F
    r0, r1 = a, b
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while r1:
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = r0.lc.inv()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def from_roots(F: FieldParams, roots: Sequence) -> Poly:
    """Monic ∏(x - root)."""
    out = Poly.one(F)
    for r in roots:
        out = out * Poly(F, [-r if isinstance(r, FieldElement) else F(-r), F.one])
    return out


def elementary_symmetric(values: Sequence[FieldElement]) -> list[FieldElement]:
    """[e_1, ..., e_n] of the inputs, read off from ∏(T + v)."""
    if not values:
        return []
    F = values[0].F
    # coefficients of ∏(T + v), highest degree first: [1, e1, e2, ...]
    acc = [F.one]
    for v in values:
        nxt = acc + [F.zero]
        for k in range(1, len(nxt)):
            nxt[k] = nxt[k] + v * acc[k - 1]
        acc = nxt
    return acc[1:]

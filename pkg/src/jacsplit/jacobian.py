"""Odd-degree hyperelliptic curves y^2 = f(x) and Cantor arithmetic on J(L).

Divisor classes are reduced Mumford pairs (U, V): U monic, deg V < deg U <= g,
U | V^2 - f.  The identity is (1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    NotOnCurve,
    OddSupport,
    RepeatedRoot,
    RootNotInR,
    RootNotRational,
    WrongRootCount,
)
from .ff import FieldElement, FieldParams, field
from .poly import Poly, from_roots, xgcd


@dataclass(frozen=True)
class Curve:
    F: FieldParams
    g: int
    roots: tuple[FieldElement, ...]
    f: Poly = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "f", from_roots(self.F, self.roots))

    @property
    def p(self) -> int:
        return self.F.p

    def root_index(self, beta) -> int:
        beta = _elt(self.F, beta)
        try:
            return self.roots.index(beta)
        except ValueError:
            raise RootNotInR(f"{beta!r} is not a root of f") from None


@dataclass(frozen=True)
class AffinePoint:
    """A point (a, b) of the curve, or the point at infinity when both are None."""

    a: Optional[FieldElement]
    b: Optional[FieldElement]

    @property
    def is_infinity(self) -> bool:
        return self.a is None


INFINITY = AffinePoint(None, None)


@dataclass(frozen=True)
class MumfordDivisor:
    U: Poly
    V: Poly

    @classmethod
    def identity(cls, F: FieldParams) -> MumfordDivisor:
        return cls(Poly.one(F), Poly.zero(F))

    @property
    def degree(self) -> int:
        return int(self.U.degree)

    def is_identity(self) -> bool:
        return self.U.degree == 0

    def __repr__(self):
        return f"({self.U!r}, {self.V!r})"


def _elt(F: FieldParams, v) -> FieldElement:
    return v if isinstance(v, FieldElement) else F(v)


def curve_new(p: int, g: int, roots: Sequence) -> Curve:
    F = field(p)
    if g < 1 or len(roots) != 2 * g + 1:
        raise WrongRootCount(f"genus {g} needs {2 * g + 1} roots, got {len(roots)}")
    rs = tuple(_elt(F, r) for r in roots)
    for r in rs:
        if not r.is_prime_field:
            raise RootNotRational(f"root {r!r} is not in F_{p}")
    if len(set(rs)) != len(rs):
        raise RepeatedRoot(f"roots {list(rs)} are not distinct")
    return Curve(F, g, rs)


def make_point(c: Curve, a, b) -> AffinePoint:
    """Build a finite point, rejecting pairs off the curve."""
    P = AffinePoint(_elt(c.F, a), _elt(c.F, b))
    if not point_on_curve(c, P):
        raise NotOnCurve(f"({P.a!r}, {P.b!r}) is not on y^2 = {c.f!r}")
    return P


def point_on_curve(c: Curve, P: AffinePoint) -> bool:
    if P.is_infinity:
        return True
    return P.b * P.b == c.f(P.a)


def weierstrass_point(c: Curve, beta) -> AffinePoint:
    c.root_index(beta)
    return AffinePoint(_elt(c.F, beta), c.F.zero)


def mumford_validate(c: Curve, D: MumfordDivisor) -> bool:
    U, V = D.U, D.V
    if U.F != c.F:
        return False
    if not U.is_monic() or U.degree > c.g or not V.degree < U.degree:
        return False
    return not (V * V - c.f) % U


def point_to_mumford(c: Curve, P: AffinePoint) -> MumfordDivisor:
    if P.is_infinity:
        return MumfordDivisor.identity(c.F)
    return MumfordDivisor(Poly(c.F, [-P.a, 1]), Poly(c.F, [P.b]))


def neg(c: Curve, D: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(D.U, -D.V)


def _reduce(c: Curve, U: Poly, V: Poly) -> MumfordDivisor:
    f = c.f
    while U.degree > c.g:
        U = (f - V * V).exact_div(U)
        V = (-V) % U
    U = U.monic()
    return MumfordDivisor(U, V % U)


def cantor_add(c: Curve, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    """Composition followed by reduction."""
    if D1.is_identity():
        return D2
    if D2.is_identity():
        return D1
    U1, V1, U2, V2 = D1.U, D1.V, D2.U, D2.V
    d1, e1, e2 = xgcd(U1, U2)
    if d1.degree == 0:
        U = U1 * U2
        V = (e1 * U1 * V2 + e2 * U2 * V1) % U
    else:
        d, c1, s3 = xgcd(d1, V1 + V2)
        s1, s2 = c1 * e1, c1 * e2
        U = (U1 * U2).exact_div(d * d)
        V = (s1 * U1 * V2 + s2 * U2 * V1 + s3 * (V1 * V2 + c.f)).exact_div(d) % U
    return _reduce(c, U, V)


def cantor_double(c: Curve, D: MumfordDivisor) -> MumfordDivisor:
    return cantor_add(c, D, D)


def scalar_mul(c: Curve, k: int, D: MumfordDivisor) -> MumfordDivisor:
    if k < 0:
        return scalar_mul(c, -k, neg(c, D))
    if k >= 1 << 63:
        raise ValueError("scalar exceeds 63 bits")
    acc = MumfordDivisor.identity(c.F)
    for bit in bin(k)[2:]:
        acc = cantor_double(c, acc)
        if bit == "1":
            acc = cantor_add(c, acc, D)
    return acc


def two_torsion_point(c: Curve, support: Iterable) -> MumfordDivisor:
    """The sum of the Weierstrass points W_α over an even subset of roots.

    Uses the subset itself when it has at most g elements, otherwise its
    complement; the two sums agree because all W_α add up to zero.
    """
    support = list(support)
    idx = sorted({c.root_index(a) for a in support})
    if len(idx) != len(support):
        raise RepeatedRoot("support lists a root twice")
    if len(idx) % 2:
        raise OddSupport(f"support of size {len(idx)} is odd")
    if len(idx) > c.g:
        idx = [i for i in range(len(c.roots)) if i not in idx]
    U = from_roots(c.F, [c.roots[i] for i in idx])
    return MumfordDivisor(U, Poly.zero(c.F))


def even_subsets(n: int) -> list[tuple[int, ...]]:
    """Index subsets of range(n) with even size, ordered by bitmask value."""
    subsets = [s for k in range(0, n + 1, 2) for s in combinations(range(n), k)]
    return sorted(subsets, key=lambda s: sum(1 << i for i in s))


def enumerate_two_torsion(c: Curve) -> list[MumfordDivisor]:
    return [two_torsion_point(c, [c.roots[i] for i in s]) for s in even_subsets(len(c.roots))]

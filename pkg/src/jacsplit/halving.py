"""Halves of a curve point P = (a, b) in the Jacobian, parameterized by square roots.

A square-root profile r picks r(α) with r(α)^2 = a - α for every root α of f,
subject to ∏ r(α) = -b.  Each profile yields one half of P through the
elementary symmetric functions s_k of its values:

    U_r(x) = (-1)^g [ (a-x)^g + Σ_{j=1..g} s_{2j} (a-x)^{g-j} ]
    V_r(x) = Σ_{j=1..g} (s_{2j+1} - s_1 s_{2j}) (a-x)^{g-j}

and the map r -> (U_r, V_r) is a bijection onto the 2^{2g} halves.  Negating
r on an even set S of roots moves the half by the 2-torsion point Σ_{α∈S} W_α.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .errors import (
    BadInput,
    BadProduct,
    BadSquareRoot,
    DegenerateDenominator,
    InfinitePoint,
    InternalInconsistency,
    NotAHalf,
    NotOnCurve,
    OddSupport,
    ThetaDegenerate,
    WeierstrassInSupport,
    WrongRootCount,
)
from .ff import FieldElement, sqrt
from .jacobian import (
    AffinePoint,
    Curve,
    MumfordDivisor,
    cantor_add,
    cantor_double,
    even_subsets,
    mumford_validate,
    point_on_curve,
    point_to_mumford,
    two_torsion_point,
)
from .poly import Poly, elementary_symmetric


@dataclass(frozen=True)
class SignVector:
    """An even-weight function R -> F_2; bit i set means negate the i-th root's value."""

    bits: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))
        if sum(self.bits) % 2:
            raise OddSupport(f"sign vector {self} has odd weight")

    @classmethod
    def from_string(cls, s: str) -> SignVector:
        if not s or set(s) - {"0", "1"}:
            raise BadInput(f"sign vector must be a non-empty 0/1 string, got {s!r}")
        return cls(tuple(ch == "1" for ch in s))

    @classmethod
    def zero(cls, n: int) -> SignVector:
        return cls((False,) * n)

    @classmethod
    def from_support(cls, n: int, support: Sequence[int]) -> SignVector:
        s = set(support)
        return cls(tuple(i in s for i in range(n)))

    @classmethod
    def psi(cls, n: int, l: int) -> SignVector:
        """Every root except the l-th: the vector matching the single point W_l."""
        return cls(tuple(i != l for i in range(n)))

    @classmethod
    def all_even(cls, n: int) -> list[SignVector]:
        return [cls.from_support(n, s) for s in even_subsets(n)]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    def __add__(self, other: SignVector) -> SignVector:
        return SignVector(tuple(x != y for x, y in zip(self.bits, other.bits)))

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join("1" if b else "0" for b in self.bits)


@dataclass(frozen=True)
class SqrtProfile:
    base_point: AffinePoint
    values: tuple[FieldElement, ...]


class Half(NamedTuple):
    phi: SignVector
    profile: SqrtProfile
    divisor: MumfordDivisor


def _check_base_point(c: Curve, P: AffinePoint) -> None:
    if P.is_infinity:
        raise InfinitePoint("halving needs a finite point; halves of the identity are J[2]")
    if not point_on_curve(c, P):
        raise NotOnCurve(f"({P.a!r}, {P.b!r}) is not on the curve")
    if not P.a.is_prime_field:
        raise BadInput(f"x-coordinate {P.a!r} must lie in F_{c.p}")


def profile_new(c: Curve, P: AffinePoint, values: Sequence) -> SqrtProfile:
    _check_base_point(c, P)
    if len(values) != len(c.roots):
        raise WrongRootCount(f"expected {len(c.roots)} values, got {len(values)}")
    vals = tuple(v if isinstance(v, FieldElement) else c.F(v) for v in values)
    prod = c.F.one
    for alpha, r in zip(c.roots, vals):
        if r * r != P.a - alpha:
            raise BadSquareRoot(f"{r!r}^2 != {P.a!r} - {alpha!r}")
        prod = prod * r
    if prod != -P.b:
        raise BadProduct(f"product of square roots is {prod!r}, expected {-P.b!r}")
    return SqrtProfile(P, vals)


def base_profile(c: Curve, P: AffinePoint) -> SqrtProfile:
    """Canonical square roots, with the first nonzero one negated if the product is +b."""
    _check_base_point(c, P)
    vals = [sqrt(P.a - alpha)[0] for alpha in c.roots]
    prod = c.F.one
    for r in vals:
        prod = prod * r
    if prod != -P.b:
        i = next(i for i, r in enumerate(vals) if r)
        vals[i] = -vals[i]
    return profile_new(c, P, vals)


def flip(r: SqrtProfile, phi: SignVector) -> SqrtProfile:
    if len(phi) != len(r.values):
        raise WrongRootCount(f"sign vector length {len(phi)} != {len(r.values)}")
    vals = tuple(-v if b else v for v, b in zip(r.values, phi.bits))
    return SqrtProfile(r.base_point, vals)


def check_half(c: Curve, P: AffinePoint, D: MumfordDivisor) -> Optional[str]:
    """Why D fails to be a generic half of P (full degree, no Weierstrass point), or None."""
    if not mumford_validate(c, D):
        return "not a valid Mumford pair"
    if D.U.degree != c.g:
        return f"deg U = {D.U.degree}, expected {c.g}"
    if any(not D.U(alpha) for alpha in c.roots):
        return "U vanishes at a root of f"
    if cantor_double(c, D) != point_to_mumford(c, P):
        return "2D != P"
    return None


def half_from_profile(c: Curve, r: SqrtProfile, verify: bool = True) -> MumfordDivisor:
    F, g = c.F, c.g
    a = r.base_point.a
    s = [F.one] + elementary_symmetric(r.values)  # s[k] = e_k
    w = Poly(F, [a, -1])  # a - x
    wpow = [Poly.one(F)]
    for _ in range(g):
        wpow.append(wpow[-1] * w)
    U = wpow[g]
    V = Poly.zero(F)
    for j in range(1, g + 1):
        U = U + wpow[g - j] * s[2 * j]
        V = V + wpow[g - j] * (s[2 * j + 1] - s[1] * s[2 * j])
    if g % 2:
        U = -U
    D = MumfordDivisor(U, V)
    if verify:
        problem = check_half(c, r.base_point, D)
        if problem:
            raise InternalInconsistency(f"half of {r.values} is bad: {problem}")
    return D


def profile_from_half(c: Curve, P: AffinePoint, D: MumfordDivisor, check: bool = True) -> SqrtProfile:
    """Recover the profile r with half_from_profile(r) = D.

    r(α) = s_1 + (-1)^g V(α)/U(α), where s_1 comes from the first two roots.
    """
    _check_base_point(c, P)
    if check:
        problem = check_half(c, P, D)
        if problem:
            raise NotAHalf(problem)
    elif D.U.degree != c.g or any(not D.U(alpha) for alpha in c.roots):
        raise NotAHalf("U must have degree g and no root in common with f")
    sign = -1 if c.g % 2 else 1
    ratio = [D.V(alpha) / D.U(alpha) for alpha in c.roots]
    beta, gamma = c.roots[0], c.roots[1]
    wb, wg = ratio[0], ratio[1]
    denom = wg - wb
    if not denom:
        raise DegenerateDenominator(f"V/U agrees at {beta!r} and {gamma!r}")
    s1 = ((beta + wb * wb) - (gamma + wg * wg)) / (denom * 2) * sign
    vals = [s1 + w * sign for w in ratio]
    try:
        return profile_new(c, P, vals)
    except (BadSquareRoot, BadProduct) as exc:
        raise InternalInconsistency(f"recovered profile is invalid: {exc}") from exc


def weierstrass_translate(c: Curve, D: MumfordDivisor, beta) -> MumfordDivisor:
    """D + W_β in closed form, for deg U = g and U(β) != 0."""
    beta = c.roots[c.root_index(beta)]
    U, V = D.U, D.V
    if U.degree != c.g:
        raise ThetaDegenerate(f"deg U = {U.degree} < g = {c.g}")
    u_beta = U(beta)
    if not u_beta:
        raise WeierstrassInSupport(f"U({beta!r}) = 0")
    lam = V(beta) / u_beta
    V1 = V - U * lam
    U_new = (c.f - V1 * V1).exact_div(Poly(c.F, [-beta, 1]) * U)
    V_new = -V + (U - U_new) * lam
    if U_new.degree != c.g or not U_new.is_monic():
        raise InternalInconsistency(f"translated U = {U_new!r} is not monic of degree {c.g}")
    return MumfordDivisor(U_new, V_new)


def enumerate_halves(c: Curve, P: AffinePoint, verify: bool = True) -> list[Half]:
    """All 2^{2g} halves of P, one per even sign vector applied to the base profile."""
    r0 = base_profile(c, P)
    out = []
    for phi in SignVector.all_even(len(c.roots)):
        r = flip(r0, phi)
        out.append(Half(phi, r, half_from_profile(c, r, verify=verify)))
    if verify and len({h.divisor for h in out}) != len(out):
        raise InternalInconsistency("two profiles produced the same half")
    return out


@dataclass
class SignCheck:
    profile_phi: SignVector  # the profile is flip(base_profile, profile_phi)
    phi: SignVector
    ok: bool
    psi_root: Optional[int] = None  # l when phi is the single-point vector psi_l
    flipped_half: Optional[MumfordDivisor] = None
    translated_half: Optional[MumfordDivisor] = None


@dataclass
class SignTheoremReport:
    curve: Curve
    point: AffinePoint
    checks: list[SignCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ch.ok for ch in self.checks)

    @property
    def failures(self) -> list[SignCheck]:
        return [ch for ch in self.checks if not ch.ok]

    @property
    def psi_checks(self) -> list[SignCheck]:
        return [ch for ch in self.checks if ch.psi_root is not None]


def verify_sign_theorem(c: Curve, P: AffinePoint, halves: Optional[list[Half]] = None) -> SignTheoremReport:
    """Check half(flip(r, φ)) = half(r) + T_φ for every profile r and even φ."""
    if halves is None:
        halves = enumerate_halves(c, P)
    n = len(c.roots)
    cache = {h.profile.values: h.divisor for h in halves}
    psi = {SignVector.psi(n, l): l for l in range(n)}
    report = SignTheoremReport(c, P)
    for phi in SignVector.all_even(n):
        T = two_torsion_point(c, [c.roots[i] for i in phi.support])
        for h in halves:
            flipped = flip(h.profile, phi)
            lhs = cache.get(flipped.values)
            if lhs is None:
                lhs = cache[flipped.values] = half_from_profile(c, flipped, verify=False)
            rhs = cantor_add(c, h.divisor, T)
            ok = lhs == rhs
            report.checks.append(SignCheck(
                h.phi, phi, ok, psi.get(phi),
                None if ok else lhs, None if ok else rhs,
            ))
    return report

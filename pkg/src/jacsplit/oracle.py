"""Brute-force verifiers for the halving formulas on small fields.

Nothing here uses the square-root construction to produce an answer: halves
are found by scanning every Mumford pair, and the formulas are compared
against plain Cantor arithmetic.
"""

from __future__ import annotations

import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import combinations, product
from math import comb
from typing import Callable, Optional, Sequence

from sympy import isprime

from . import serialize as ser
from .errors import InvalidGrid, JacsplitError, TooLarge
from .ff import sqrt
from .halving import (
    SignVector,
    enumerate_halves,
    half_from_profile,
    profile_from_half,
    verify_sign_theorem,
    weierstrass_translate,
)
from .jacobian import (
    INFINITY,
    AffinePoint,
    Curve,
    MumfordDivisor,
    cantor_add,
    cantor_double,
    curve_new,
    enumerate_two_torsion,
    even_subsets,
    mumford_validate,
    neg,
    point_to_mumford,
    two_torsion_point,
    weierstrass_point,
)
from .poly import Poly

log = logging.getLogger(__name__)

MAX_CANDIDATES = 1_000_000
MAX_GROUP_CHECK = 40
MAX_CURVES = 20


def candidate_count(c: Curve) -> int:
    q = c.F.order
    return sum(q ** (2 * d) for d in range(c.g + 1))


@lru_cache(maxsize=8)
def jacobian_elements(c: Curve, max_candidates: int = MAX_CANDIDATES) -> tuple[MumfordDivisor, ...]:
    """Every reduced Mumford pair over L, in lexicographic coefficient order."""
    if c.F.order > 200 or c.g > 2:
        raise TooLarge(f"brute force needs p^2 <= 200 and g <= 2 (p={c.p}, g={c.g})")
    n = candidate_count(c)
    if n > max_candidates:
        raise TooLarge(f"{n} candidate pairs exceeds the limit {max_candidates}")
    F = c.F
    els = list(F.elements())
    out = []
    for d in range(c.g + 1):
        for ucs in product(els, repeat=d):
            U = Poly(F, list(ucs) + [F.one])
            fmod = c.f % U
            for vcs in product(els, repeat=d):
                V = Poly(F, vcs)
                if not (V * V - fmod) % U:
                    out.append(MumfordDivisor(U, V))
    return tuple(out)


@lru_cache(maxsize=8)
def _doubling_table(c: Curve) -> dict[MumfordDivisor, MumfordDivisor]:
    return {D: cantor_double(c, D) for D in jacobian_elements(c)}


def brute_force_halves(c: Curve, P: AffinePoint) -> list[MumfordDivisor]:
    """All D in J(L) with 2D = P, found by exhaustive search.  P may be INFINITY."""
    target = point_to_mumford(c, P)
    return [D for D, D2 in _doubling_table(c).items() if D2 == target]


@dataclass
class GroupCheckReport:
    size: int
    failures: dict[str, int]

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())


def exhaustive_group_check(c: Curve) -> GroupCheckReport:
    """Abelian group axioms for cantor_add over the whole of J(L)."""
    J = jacobian_elements(c)
    if len(J) > MAX_GROUP_CHECK:
        raise TooLarge(f"|J(L)| = {len(J)} is too large for a triple loop")
    e = MumfordDivisor.identity(c.F)
    fails = dict.fromkeys(["closure", "identity", "inverse", "commutativity", "associativity"], 0)
    members = set(J)
    table = {(A, B): cantor_add(c, A, B) for A in J for B in J}
    for A in J:
        fails["identity"] += table[A, e] != A or table[e, A] != A
        fails["inverse"] += cantor_add(c, A, neg(c, A)) != e
        for B in J:
            fails["closure"] += table[A, B] not in members
            fails["commutativity"] += table[A, B] != table[B, A]
            for C in J:
                fails["associativity"] += table[table[A, B], C] != table[A, table[B, C]]
    return GroupCheckReport(len(J), fails)


# ---------------------------------------------------------------- sweep


@dataclass
class CaseResult:
    curve: dict
    point: object  # JSON form of the point, None for per-curve checks
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    halves: int = 0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "curve": self.curve,
            "point": self.point,
            "checks": self.checks,
            "failures": self.failures,
            "halves": self.halves,
            "status": "pass" if self.passed else "fail",
        }


@dataclass
class SweepReport:
    ps: list[int]
    gs: list[int]
    seed: int
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failure_count(self) -> int:
        return sum(not ok for case in self.cases for ok in case.checks.values())

    def by_check(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for case in self.cases:
            for name, ok in case.checks.items():
                row = out.setdefault(name, {"pass": 0, "fail": 0})
                row["pass" if ok else "fail"] += 1
        return out

    def to_json(self) -> dict:
        return {
            "grid": {"p": self.ps, "g": self.gs},
            "seed": self.seed,
            "summary": {
                "cases": len(self.cases),
                "failures": self.failure_count(),
                "by_check": self.by_check(),
                "passed": self.passed,
            },
            "cases": [c.to_json() for c in self.cases],
        }


def _run_check(case: CaseResult, name: str, fn: Callable[[], list[dict]]) -> None:
    """Record check ``name``; ``fn`` returns counterexample payloads (empty = pass)."""
    try:
        bad = fn()
    except JacsplitError as exc:
        bad = [{"error": exc.code, "detail": str(exc)}]
    case.checks[name] = not bad
    for item in bad:
        case.failures.append({"check": name, **item})


def check_two_torsion(c: Curve) -> CaseResult:
    case = CaseResult(ser.curve_to_json(c), None)
    n = len(c.roots)
    e = MumfordDivisor.identity(c.F)

    def enumerate_ok():
        T = enumerate_two_torsion(c)
        bad = []
        if len(set(T)) != 4 ** c.g or len(T) != 4 ** c.g:
            bad.append({"detail": f"{len(set(T))} distinct of {len(T)}, expected {4 ** c.g}"})
        for D in T:
            if not mumford_validate(c, D) or cantor_double(c, D) != e:
                bad.append({"divisor": ser.divisor_to_json(D)})
        return bad

    def closed_form_ok():
        W = [point_to_mumford(c, weierstrass_point(c, a)) for a in c.roots]
        bad = []
        for s in even_subsets(n):
            closed = two_torsion_point(c, [c.roots[i] for i in s])
            folded = reduce(lambda acc, i: cantor_add(c, acc, W[i]), s, e)
            if closed != folded:
                bad.append({
                    "phi": str(SignVector.from_support(n, s)),
                    "closed_form": ser.divisor_to_json(closed),
                    "cantor": ser.divisor_to_json(folded),
                })
        return bad

    _run_check(case, "two_torsion", enumerate_ok)
    _run_check(case, "two_torsion_closed_form", closed_form_ok)
    return case


def check_point(c: Curve, P: AffinePoint, brute_force: bool = False) -> CaseResult:
    """Every halving identity at one point."""
    case = CaseResult(ser.curve_to_json(c), ser.point_to_json(P))
    target = point_to_mumford(c, P)
    try:
        halves = enumerate_halves(c, P, verify=False)
    except JacsplitError as exc:
        case.checks["halves"] = False
        case.failures.append({"check": "halves", "error": exc.code, "detail": str(exc)})
        return case
    case.halves = len(halves)

    def halves_ok():
        bad = []
        divisors = [h.divisor for h in halves]
        if len(halves) != 4 ** c.g or len(set(divisors)) != len(divisors):
            bad.append({"detail": f"{len(set(divisors))} distinct halves, expected {4 ** c.g}"})
        for h in halves:
            if not mumford_validate(c, h.divisor) or cantor_double(c, h.divisor) != target:
                bad.append({"phi": str(h.phi), "profile": ser.profile_to_json(h.profile),
                            "divisor": ser.divisor_to_json(h.divisor)})
        return bad

    def theta_ok():
        return [
            {"phi": str(h.phi), "divisor": ser.divisor_to_json(h.divisor)}
            for h in halves
            if h.divisor.U.degree != c.g or any(not h.divisor.U(a) for a in c.roots)
        ]

    def sign_ok():
        report = verify_sign_theorem(c, P, halves)
        return [
            {
                "profile_phi": str(ch.profile_phi),
                "phi": str(ch.phi),
                "flipped_half": ser.divisor_to_json(ch.flipped_half),
                "translated_half": ser.divisor_to_json(ch.translated_half),
            }
            for ch in report.failures
        ]

    def translate_ok():
        bad = []
        for h in halves:
            for beta in c.roots:
                closed = weierstrass_translate(c, h.divisor, beta)
                W = point_to_mumford(c, weierstrass_point(c, beta))
                cantor = cantor_add(c, h.divisor, W)
                back = weierstrass_translate(c, closed, beta)
                if closed != cantor or closed.U.degree != c.g or back != h.divisor:
                    bad.append({"phi": str(h.phi), "beta": beta.c0,
                                "divisor": ser.divisor_to_json(h.divisor),
                                "closed_form": ser.divisor_to_json(closed),
                                "cantor": ser.divisor_to_json(cantor)})
        return bad

    def round_trip_ok():
        bad = []
        for h in halves:
            r = profile_from_half(c, P, h.divisor, check=False)
            if r != h.profile or half_from_profile(c, r, verify=False) != h.divisor:
                bad.append({"phi": str(h.phi), "profile": ser.profile_to_json(h.profile),
                            "recovered": ser.profile_to_json(r)})
        return bad

    def brute_ok():
        oracle = set(brute_force_halves(c, P))
        mine = {h.divisor for h in halves}
        if oracle == mine:
            return []
        return [{"missing": [ser.divisor_to_json(D) for D in oracle - mine],
                 "extra": [ser.divisor_to_json(D) for D in mine - oracle]}]

    _run_check(case, "halves", halves_ok)
    _run_check(case, "theta", theta_ok)
    _run_check(case, "sign_theorem", sign_ok)
    _run_check(case, "translate", translate_ok)
    _run_check(case, "round_trip", round_trip_ok)
    if brute_force and brute_force_applicable(c):
        _run_check(case, "brute_force", brute_ok)
    return case


def brute_force_applicable(c: Curve) -> bool:
    return c.F.order <= 200 and c.g <= 2 and candidate_count(c) <= MAX_CANDIDATES


def canonical_points(c: Curve) -> list[AffinePoint]:
    """(a, b) for every a in F_p, with b the canonical root of f(a)."""
    return [AffinePoint(a, sqrt(c.f(a))[0]) for a in c.F.prime_elements()]


def root_sets(p: int, g: int, seed: int, max_curves: int = MAX_CURVES) -> list[tuple[int, ...]]:
    """All (2g+1)-subsets of F_p, or a seeded sample of ``max_curves`` of them."""
    k = 2 * g + 1
    if comb(p, k) <= max_curves:
        return list(combinations(range(p), k))
    rng = random.Random(f"{seed}:{p}:{g}")
    chosen: set[tuple[int, ...]] = set()
    while len(chosen) < max_curves:
        chosen.add(tuple(sorted(rng.sample(range(p), k))))
    return sorted(chosen)


def _curve_job(args) -> list[CaseResult]:
    p, g, roots, a_values, brute_force = args
    c = curve_new(p, g, roots)
    points = [P for P in canonical_points(c) if a_values is None or P.a.c0 in a_values]
    return [check_two_torsion(c)] + [check_point(c, P, brute_force) for P in points]


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("JACSPLIT_THREADS", "1")))
    except ValueError:
        return 1


def sweep(
    ps: Sequence[int],
    gs: Sequence[int],
    seed: int = 0,
    max_curves: int = MAX_CURVES,
    max_points: Optional[int] = None,
    brute_force: bool = False,
    workers: Optional[int] = None,
) -> SweepReport:
    """Run every check over the (p, g) grid.

    ``max_points`` caps the points per curve with a seeded sample of
    x-coordinates.  Work is spread over ``workers`` processes (default:
    ``JACSPLIT_THREADS``, else 1); results are ordered canonically.
    """
    for p in ps:
        if p < 3 or not isprime(p):
            raise InvalidGrid(f"{p} is not an odd prime")
    for g in gs:
        if g < 1:
            raise InvalidGrid(f"genus {g} < 1")
        for p in ps:
            if p < 2 * g + 1:
                raise InvalidGrid(f"F_{p} has fewer than {2 * g + 1} elements")
    jobs = []
    for p in ps:
        for g in gs:
            a_values = None
            if max_points is not None and max_points < p:
                rng = random.Random(f"{seed}:{p}:{g}:points")
                a_values = frozenset(rng.sample(range(p), max_points))
            for roots in root_sets(p, g, seed, max_curves):
                jobs.append((p, g, roots, a_values, brute_force))
    workers = workers or _threads()
    log.info("sweep: %d curves on %d worker(s)", len(jobs), workers)
    report = SweepReport(list(ps), list(gs), seed)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_curve_job, jobs))
    else:
        results = [_curve_job(j) for j in jobs]
    for cases in results:
        report.cases.extend(cases)
    return report


def brute_force_report(c: Curve, points: Optional[Sequence[AffinePoint]] = None) -> CaseResult:
    """Oracle set equality at each point (all canonical points by default)."""
    case = CaseResult(ser.curve_to_json(c), None)
    points = canonical_points(c) if points is None else points

    def compare():
        bad = []
        for P in points:
            oracle = set(brute_force_halves(c, P))
            if P.is_infinity:
                mine = set(enumerate_two_torsion(c))
            else:
                mine = {h.divisor for h in enumerate_halves(c, P)}
            if oracle != mine:
                bad.append({"point": ser.point_to_json(P), "oracle": len(oracle), "formula": len(mine)})
        return bad

    _run_check(case, "brute_force", compare)
    return case


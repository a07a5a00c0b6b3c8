"""Command-line front end.

    jacsplit halve --p 11 --roots 0,1,3 --point 5,auto
    jacsplit halve ... | jacsplit torsor --phi 011
    jacsplit halve ... | jacsplit translate --beta 3
    jacsplit verify --grid 5,7,11,13x1,2 --seed 0

All output is canonical JSON on stdout.  Exit codes: 0 success, 1 a checked
identity failed (the report says where), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import serialize as ser
from .errors import BadInput, InvalidGrid, JacsplitError, WrongRootCount
from .ff import sqrt
from .halving import (
    SignVector,
    enumerate_halves,
    flip,
    half_from_profile,
    profile_new,
    weierstrass_translate,
)
from .jacobian import (
    Curve,
    cantor_add,
    curve_new,
    make_point,
    mumford_validate,
    point_to_mumford,
    two_torsion_point,
    weierstrass_point,
)
from .oracle import MAX_CURVES, sweep

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _int_list(s: str, what: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise BadInput(f"{what} must be a comma-separated list of integers, got {s!r}") from None


def _curve_from_args(p: int, roots_arg: str) -> Curve:
    roots = _int_list(roots_arg, "--roots")
    if len(roots) % 2 == 0:
        raise WrongRootCount(f"need an odd number of roots (2g+1), got {len(roots)}")
    return curve_new(p, (len(roots) - 1) // 2, roots)


def _parse_point(c: Curve, s: str):
    parts = s.split(",")
    if len(parts) != 2:
        raise BadInput(f"--point must be 'a,b', got {s!r}")
    try:
        a = c.F(int(parts[0]))
        b_txt = parts[1].strip()
        if b_txt == "auto":
            b = sqrt(c.f(a))[0]
        elif ":" in b_txt:
            c0, c1 = b_txt.split(":")
            b = c.F(int(c0), int(c1))
        else:
            b = c.F(int(b_txt))
    except ValueError:
        raise BadInput(f"cannot parse point {s!r}") from None
    return make_point(c, a, b)


def parse_grid(s: str) -> tuple[list[int], list[int]]:
    """'5,7,11x1,2' -> ([5, 7, 11], [1, 2])."""
    parts = s.split("x")
    if len(parts) != 2:
        raise InvalidGrid(f"grid must look like '5,7,11x1,2', got {s!r}")
    try:
        ps = [int(x) for x in parts[0].split(",")]
        gs = [int(x) for x in parts[1].split(",")]
    except ValueError:
        raise InvalidGrid(f"grid must look like '5,7,11x1,2', got {s!r}") from None
    return ps, gs


def _read_json(path: Optional[str]):
    try:
        if path and path != "-":
            with open(path) as fh:
                return json.load(fh)
        return json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadInput(f"cannot read JSON input: {exc}") from exc


def _emit(obj, out: Optional[str] = None) -> None:
    text = ser.dumps(obj)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_halve(args) -> int:
    c = _curve_from_args(args.p, args.roots)
    P = _parse_point(c, args.point)
    halves = enumerate_halves(c, P, verify=not args.no_verify)
    rows = []
    for h in halves:
        row = {"phi": str(h.phi), "profile": ser.profile_to_json(h.profile)}
        if not args.profile_only:
            row.update(ser.divisor_to_json(h.divisor))
        rows.append(row)
    _emit({"curve": ser.curve_to_json(c), "point": ser.point_to_json(P), "halves": rows})
    return EXIT_OK


def _halve_doc(doc) -> tuple[Curve, list]:
    if not isinstance(doc, dict) or "curve" not in doc or "halves" not in doc:
        raise BadInput("expected the JSON output of 'jacsplit halve'")
    return ser.curve_from_json(doc["curve"]), doc["halves"]


def cmd_torsor(args) -> int:
    c, rows = _halve_doc(_read_json(args.input))
    phi = SignVector.from_string(args.phi)
    if len(phi) != len(c.roots):
        raise WrongRootCount(f"--phi has {len(phi)} bits, curve has {len(c.roots)} roots")
    T = two_torsion_point(c, [c.roots[i] for i in phi.support])
    out_rows, all_equal = [], True
    point_json = None
    for row in rows:
        if not isinstance(row, dict) or "profile" not in row:
            raise BadInput(f"half entry without a profile: {row!r}")
        P, values = ser.profile_from_json(c.F, row["profile"])
        r = profile_new(c, P, values)
        point_json = ser.point_to_json(P)
        flipped = flip(r, phi)
        recomputed = half_from_profile(c, flipped, verify=not args.no_verify)
        moved = cantor_add(c, half_from_profile(c, r, verify=not args.no_verify), T)
        equal = recomputed == moved
        all_equal &= equal
        in_phi = SignVector.from_string(row["phi"]) if "phi" in row else SignVector.zero(len(c.roots))
        out_rows.append({
            "phi": str(in_phi + phi),
            "profile": ser.profile_to_json(flipped),
            **ser.divisor_to_json(recomputed),
            "cantor": ser.divisor_to_json(moved),
            "equal": equal,
        })
    _emit({
        "curve": ser.curve_to_json(c),
        "point": point_json,
        "phi": str(phi),
        "equal": all_equal,
        "halves": out_rows,
    })
    return EXIT_OK if all_equal else EXIT_VIOLATION


def _divisors_from_doc(doc) -> tuple[Curve, list]:
    if not isinstance(doc, dict) or "curve" not in doc:
        raise BadInput("translate input needs a 'curve' and divisors")
    c = ser.curve_from_json(doc["curve"])
    if "halves" in doc:
        items = doc["halves"]
    elif "divisors" in doc:
        items = doc["divisors"]
    else:
        items = [doc]
    return c, [ser.divisor_from_json(c.F, it) for it in items]


def cmd_translate(args) -> int:
    if args.U is not None or args.V is not None:
        if args.p is None or args.roots is None or args.U is None or args.V is None:
            raise BadInput("--U/--V need --p, --roots and both polynomials")
        c = _curve_from_args(args.p, args.roots)
        try:
            doc = {"U": json.loads(args.U), "V": json.loads(args.V)}
        except json.JSONDecodeError as exc:
            raise BadInput(f"--U/--V must be JSON arrays: {exc}") from exc
        divisors = [ser.divisor_from_json(c.F, doc)]
    else:
        c, divisors = _divisors_from_doc(_read_json(args.input))
    beta = c.roots[c.root_index(args.beta)]
    W = point_to_mumford(c, weierstrass_point(c, beta))
    rows, all_equal = [], True
    for D in divisors:
        if not mumford_validate(c, D):
            raise BadInput(f"{D!r} is not a reduced Mumford pair on this curve")
        closed = weierstrass_translate(c, D, beta)
        cantor = cantor_add(c, D, W)
        equal = closed == cantor
        all_equal &= equal
        rows.append({
            **ser.divisor_to_json(closed),
            "input": ser.divisor_to_json(D),
            "cantor": ser.divisor_to_json(cantor),
            "equal": equal,
        })
    _emit({"curve": ser.curve_to_json(c), "beta": beta.c0, "equal": all_equal, "divisors": rows})
    return EXIT_OK if all_equal else EXIT_VIOLATION


def cmd_verify(args) -> int:
    ps, gs = parse_grid(args.grid)
    report = sweep(
        ps, gs, seed=args.seed, max_curves=args.max_curves,
        max_points=args.max_points, brute_force=args.brute_force == "on",
    )
    _emit(report.to_json(), args.out)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jacsplit", description="Halves of points on y^2 = f(x).")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    h = sub.add_parser("halve", help="all 2^(2g) halves of a point")
    h.add_argument("--p", type=int, required=True)
    h.add_argument("--roots", required=True, help="comma-separated roots of f in F_p")
    h.add_argument("--point", required=True, help="'a,b' with b an integer, 'c0:c1', or 'auto'")
    h.add_argument("--profile-only", action="store_true", help="omit the Mumford pairs")
    h.add_argument("--no-verify", action="store_true", help="skip the doubling self-check")
    h.set_defaults(func=cmd_halve)

    t = sub.add_parser("torsor", help="apply an even sign flip to halve output")
    t.add_argument("--phi", required=True, help="bit string of even weight, one bit per root")
    t.add_argument("--in", dest="input", help="halve output JSON (default: stdin)")
    t.add_argument("--no-verify", action="store_true")
    t.set_defaults(func=cmd_torsor)

    tr = sub.add_parser("translate", help="add a Weierstrass point in closed form")
    tr.add_argument("--beta", type=int, required=True, help="a root of f")
    tr.add_argument("--in", dest="input", help="JSON with 'curve' and divisors (default: stdin)")
    tr.add_argument("--p", type=int)
    tr.add_argument("--roots")
    tr.add_argument("--U", help="JSON array of coefficients, lowest degree first")
    tr.add_argument("--V", help="JSON array of coefficients, lowest degree first")
    tr.set_defaults(func=cmd_translate)

    v = sub.add_parser("verify", help="run the verification sweep")
    v.add_argument("--grid", default="5,7,11,13x1,2", help="primes x genera, e.g. 5,7x1,2")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--brute-force", choices=["on", "off"], default="off")
    v.add_argument("--max-curves", type=int, default=MAX_CURVES)
    v.add_argument("--max-points", type=int, default=None)
    v.add_argument("--out", help="write the report here instead of stdout")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except JacsplitError as exc:
        _emit({"error": exc.code, "detail": str(exc)})
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Compare the square-root construction against exhaustive search over J(F_{p^2}).

    python scripts/brute_force_check.py --p 5 --roots 0,1,2,3,4
"""

import argparse
import time

from jacsplit.halving import enumerate_halves
from jacsplit.jacobian import INFINITY, curve_new, enumerate_two_torsion
from jacsplit.oracle import brute_force_halves, canonical_points, jacobian_elements


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--roots", default="0,1,2,3,4")
    args = ap.parse_args()

    roots = [int(r) for r in args.roots.split(",")]
    c = curve_new(args.p, (len(roots) - 1) // 2, roots)
    t0 = time.perf_counter()
    J = jacobian_elements(c)
    print(f"|J(F_{args.p}^2)| = {len(J)}  ({time.perf_counter() - t0:.1f}s to enumerate)")

    assert set(brute_force_halves(c, INFINITY)) == set(enumerate_two_torsion(c))
    print(f"halves of identity: {len(enumerate_two_torsion(c))} (= J[2])")
    for P in canonical_points(c):
        oracle = set(brute_force_halves(c, P))
        mine = {h.divisor for h in enumerate_halves(c, P)}
        status = "ok" if oracle == mine else "MISMATCH"
        print(f"P = ({P.a!r}, {P.b!r}): oracle {len(oracle):3d}, formula {len(mine):3d}  {status}")


if __name__ == "__main__":
    main()

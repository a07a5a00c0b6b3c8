"""Run the verification grid and print a pass/fail matrix per (p, g).

    python scripts/run_sweep.py --grid 5,7,11,13x1,2 --seed 0 --out report.json
"""

import argparse
import json
import time
from collections import defaultdict

from jacsplit.cli import parse_grid
from jacsplit.oracle import sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", default="5,7,11,13x1,2")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-curves", type=int, default=20)
    ap.add_argument("--max-points", type=int, default=None)
    ap.add_argument("--brute-force", action="store_true")
    ap.add_argument("--out")
    args = ap.parse_args()

    ps, gs = parse_grid(args.grid)
    t0 = time.perf_counter()
    report = sweep(ps, gs, args.seed, args.max_curves, args.max_points, args.brute_force)
    elapsed = time.perf_counter() - t0

    cells = defaultdict(lambda: defaultdict(lambda: [0, 0]))
    for case in report.cases:
        key = (case.curve["p"], case.curve["g"])
        for name, ok in case.checks.items():
            cells[key][name][0 if ok else 1] += 1
    names = sorted({n for cell in cells.values() for n in cell})
    print(f"{'p':>4} {'g':>2}  " + "  ".join(f"{n:>24}" for n in names))
    for (p, g), cell in sorted(cells.items()):
        row = [f"{cell[n][0]}/{sum(cell[n])}" if n in cell else "-" for n in names]
        print(f"{p:>4} {g:>2}  " + "  ".join(f"{r:>24}" for r in row))
    print(f"\n{report.failure_count()} failures in {elapsed:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report.to_json(), fh, sort_keys=True, indent=1)


if __name__ == "__main__":
    main()

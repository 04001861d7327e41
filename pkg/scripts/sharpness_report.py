"""Run the sampled sharpness checks on a few parameter sets and print a JSON summary.

    python scripts/sharpness_report.py [--quick]

The reports are numerical evidence on a finite grid, not proofs.
"""

import argparse
import json
import sys
import time

from pvalent.subordination import (
    Grid,
    majorization_scan,
    sharpness_eta,
    sharpness_radius,
    sharpness_rho,
)

RHO_CASES = [(2, 0.5, 1.0, 0.7, -0.1, -0.5), (1, 0.0, 1.0, 0.8, 0.2, -0.5)]
RADIUS_CASES = [(1, 0.0, 1.0, 0.5, 0.5, -0.5), (2, 0.3, 1.2, 1.0, 0.2, -0.9)]
MAJORIZATION_CASES = [(1, 0.0, 1.0, 1.0, -1.0), (2, 0.5, 1.5, 0.6, -0.4)]
ETA_CASES = [(1, 0.0, 1.0, 1.0, 1.0, 1.0), (2, 0.5, 1.0, 0.6, 0.3, 0.8)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="coarser grids")
    args = ap.parse_args(argv)
    grid = Grid(16, 128) if args.quick else Grid()

    rows = []
    t0 = time.perf_counter()
    for case in RHO_CASES:
        rows.append(("rho", case, sharpness_rho(*case, grid=grid)))
    for case in RADIUS_CASES:
        rows.append(("radius", case, sharpness_radius(*case, angular=grid.angular)))
    for case in MAJORIZATION_CASES:
        rows.append(("majorization", case, majorization_scan(*case)))
    for case in ETA_CASES:
        rows.append(("eta", case, sharpness_eta(*case)))

    report = [{"check": name, "params": list(case), **rep.to_json()} for name, case, rep in rows]
    json.dump(report, sys.stdout, indent=1)
    sys.stdout.write("\n")
    passed = sum(rep.passed for _, _, rep in rows)
    print(f"{passed}/{len(rows)} checks passed in {time.perf_counter() - t0:.1f} s", file=sys.stderr)
    return 0 if passed == len(rows) else 1


if __name__ == "__main__":
    sys.exit(main())

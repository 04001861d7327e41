"""Regenerate a table of sharp bounds by driving the command-line tool.

    python scripts/bound_table.py > bounds.csv
    python scripts/bound_table.py --p 2 --alpha 0.5 --beta 1.0 --mu 0.5 1.0 2.0

Each row is one (mu, A, B) point; cells outside the hypotheses are left empty.
"""

import argparse
import csv
import json
import subprocess
import sys


def cli(*args):
    res = subprocess.run([sys.executable, "-m", "pvalent", *map(str, args)], capture_output=True, text=True)
    if res.returncode == 3:
        return None
    if res.returncode != 0:
        raise RuntimeError(res.stderr.strip())
    return json.loads(res.stdout)["value"]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=1)
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--alpha", type=float, default=0.0)
    ap.add_argument("--beta", type=float, default=1.0)
    ap.add_argument("--mu", type=float, nargs="+", default=[0.5, 1.0, 2.0])
    ap.add_argument("--B", type=float, nargs="+", default=[-1.0, -0.5])
    ap.add_argument("--A", type=float, nargs="+", default=[-0.5, 0.0, 0.5, 1.0])
    args = ap.parse_args(argv)

    op = ["--p", args.p, "--alpha", args.alpha, "--beta", args.beta]
    out = csv.writer(sys.stdout)
    out.writerow(["mu", "A", "B", "rho", "sigma", "radius_mu_kappa"])
    for mu in args.mu:
        for B in args.B:
            for A in args.A:
                if A <= B:
                    continue
                cls = ["--mu", mu, "--A", A, "--B", B]
                rho = cli("bound", "--name", "rho", *op, *cls)
                sigma = cli("bound", "--name", "sigma", "--n", args.n, *op, *cls)
                radius = cli("radius", "--name", "mu_kappa", *op, *cls)
                out.writerow([mu, A, B] + ["" if v is None else f"{v:.12g}" for v in (rho, sigma, radius)])
    return 0


if __name__ == "__main__":
    sys.exit(main())

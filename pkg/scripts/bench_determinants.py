"""Time cofactor expansion against Bareiss elimination on Casorati matrices.

The matrices are the ones behind Xibar_{0..n-1}, i.e. eigenpolynomials of
degree < n, so entry degrees grow with the size.

    python3 scripts/bench_determinants.py --family AW --max-n 7
"""

from __future__ import annotations

import argparse
import time

from casoratia.casoratian import casorati_matrix, det_bareiss, det_cofactor
from casoratia.families import eigen_poly, family, sample_params


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="W")
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--cofactor-limit", type=int, default=6, help="skip cofactor above this size")
    args = ap.parse_args()

    spec = family(args.family)
    p = sample_params(spec, args.seed)
    print(f"{'n':>3} {'cofactor ms':>12} {'bareiss ms':>12}  agree")
    for n in range(1, args.max_n + 1):
        mat = casorati_matrix([eigen_poly(spec, k, p) for k in range(n)], p.qbase)
        tb, db = best_of(lambda: det_bareiss(mat), args.repeat)
        if n <= args.cofactor_limit:
            tc, dc = best_of(lambda: det_cofactor(mat), args.repeat)
            print(f"{n:3d} {tc * 1e3:12.2f} {tb * 1e3:12.2f}  {dc == db}")
        else:
            print(f"{n:3d} {'-':>12} {tb * 1e3:12.2f}  -")


if __name__ == "__main__":
    main()

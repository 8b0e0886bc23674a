"""Sweep the main identity and its duality corollaries over an index grid.

Writes one JSON report per line and prints a per-family tally.  Example:

    python3 scripts/run_grid.py --max-d 4 --max-m 3 --draws 5 --out grid.jsonl
"""

from __future__ import annotations

import argparse
import itertools
import time
from collections import Counter
from dataclasses import dataclass

from casoratia.cli import serialize_report
from casoratia.families import FAMILY_NAMES
from casoratia.verify import Task, run_batch

CHECKS = ("main_identity", "poldual", "potential_duality")


@dataclass
class GridConfig:
    families: tuple = tuple(FAMILY_NAMES)
    max_d: int = 4
    max_m: int = 3
    n_extra: int = 2
    draws: int = 5
    seed: int = 0
    out: str | None = None

    def index_sets(self):
        for m in range(1, self.max_m + 1):
            yield from itertools.combinations(range(self.max_d + 1), m)


def plan(cfg: GridConfig):
    tasks = []
    for name in cfg.families:
        for D in cfg.index_sets():
            for N in range(max(D), max(D) + cfg.n_extra + 1):
                for draw in range(cfg.draws):
                    for check in CHECKS:
                        kw = {"D": D, "N": N}
                        if check == "poldual":
                            kw["n_max"] = 2
                        tasks.append(Task(check, name, cfg.seed, draw, tuple(sorted(kw.items()))))
    return tasks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="all")
    ap.add_argument("--max-d", type=int, default=4)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--n-extra", type=int, default=2)
    ap.add_argument("--draws", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    args = ap.parse_args()
    fams = tuple(FAMILY_NAMES) if args.family == "all" else tuple(args.family.split(","))
    cfg = GridConfig(fams, args.max_d, args.max_m, args.n_extra, args.draws, args.seed, args.out)

    tasks = plan(cfg)
    t0 = time.perf_counter()
    tally = Counter()
    resampled = Counter()
    sink = open(cfg.out, "wb") if cfg.out else None
    try:
        for r in run_batch(tasks, stable_order=True):
            tally[(r.family, r.verdict.value)] += 1
            if r.attempts > 1:
                resampled[r.family] += 1
            if sink:
                sink.write(serialize_report(r))
    finally:
        if sink:
            sink.close()
    print(f"{len(tasks)} checks in {time.perf_counter() - t0:.1f}s")
    for name in cfg.families:
        row = {v: tally[(name, v)] for v in ("Pass", "Fail", "Degenerate")}
        print(f"{name:5s} pass={row['Pass']:5d} fail={row['Fail']:3d} degenerate={row['Degenerate']:3d} "
              f"resampled={resampled[name]}")


if __name__ == "__main__":
    main()

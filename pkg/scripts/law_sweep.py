"""Run every law suite over several seeds and report the worst residuals.

    python scripts/law_sweep.py --trials 200 --seeds 0 1 2
"""
from __future__ import annotations

import argparse
import time

from crossdim.checks import SUITES, run_suite


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    parser.add_argument("--tol", type=float, default=1e-9)
    args = parser.parse_args()

    worst: dict[tuple[str, str], float] = {}
    failures = 0
    start = time.perf_counter()
    for seed in args.seeds:
        for suite in SUITES:
            for r in run_suite(suite, seed=seed, trials=args.trials, tol=args.tol):
                key = (r.suite, r.law)
                worst[key] = max(worst.get(key, 0.0), r.max_residual)
                failures += not r.passed
    for (suite, law), value in sorted(worst.items()):
        print(f"{suite:<10} {law:<34} {value:.3e}")
    print(f"{len(worst)} laws, {len(args.seeds)} seeds, {failures} failures, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()

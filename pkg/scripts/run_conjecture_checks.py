#!/usr/bin/env python3
"""Run the full equivariant log-concavity evidence battery.

Reproduces the headline computer checks: the low-degree/co-degree harness
up to --n-max, a full-degree scan and d-unimodality report at --full-n,
and the numeric Betti log-concavity cross-check.  Reports are written as
JSON documents under --report-dir.
"""

import argparse
import sys
from pathlib import Path

from coinvariant import cli
from coinvariant.verify import betti_log_concavity


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--full-n", type=int, default=8)
    parser.add_argument("--report-dir", default="reports")
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    report_dir = Path(args.report_dir)
    report_dir.mkdir(parents=True, exist_ok=True)
    common = ["--jobs", str(args.jobs)]
    if args.cache_dir:
        common += ["--cache-dir", args.cache_dir]

    worst = 0
    commands = [
        ["low-degree-harness", "--n-max", str(args.n_max),
         "--out", str(report_dir / f"low-degree-{args.n_max}.json")],
        ["verify-flag", "--n", str(args.full_n), "--degrees", "all",
         "--out", str(report_dir / f"flag-lc-{args.full_n}.json")],
        ["unimodal", "--n", str(args.full_n),
         "--out", str(report_dir / f"unimodal-{args.full_n}.json")],
    ]
    for command in commands:
        code = cli.run(command + common)
        worst = max(worst, code)

    for n in range(1, args.n_max + 1):
        ok = betti_log_concavity(n)
        print(f"betti log-concavity n={n}: {'pass' if ok else 'FAIL'}")
        if not ok:
            worst = max(worst, 2)
    return worst


if __name__ == "__main__":
    sys.exit(main())

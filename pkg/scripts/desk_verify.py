#!/usr/bin/env python3
"""Run the whole verification suite across a range of matrix sizes.

Each size gets the same per-size check plan the `commsyz verify` subcommand
uses; sizes above the desk limit simply skip the Groebner-scale checks unless
an explicit budget is supplied.  Exit status is nonzero iff any check FAILs.

Example:
    python3 scripts/desk_verify.py --sizes 2 3 4 --threads 4
"""

import argparse
import sys

from commsyz.cli import RunConfig, emit, run_verify_suite


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes", type=int, nargs="+", default=[2, 3], metavar="N",
        help="matrix sizes to verify (default: 2 3)",
    )
    parser.add_argument("--field", default="gf:32003", help="q or gf:p (default gf:32003)")
    parser.add_argument("--threads", type=int, default=1, help="checks run in parallel")
    parser.add_argument("--budget-spairs", type=int, default=None,
                        help="cap on reduced S-pairs per basis (enables big-n runs)")
    parser.add_argument("--budget-seconds", type=float, default=None,
                        help="wall-clock cap per basis computation")
    parser.add_argument("--json", action="store_true", help="emit one JSON report per size")
    args = parser.parse_args(argv)

    failed = False
    for n in args.sizes:
        cfg = RunConfig(
            command="verify",
            n=n,
            field=args.field,
            threads=args.threads,
            budget_spairs=args.budget_spairs,
            budget_seconds=args.budget_seconds,
            json_output=args.json,
        )
        report = run_verify_suite(cfg)
        print(emit(report, "json" if args.json else "text"))
        print()
        if any(r["verdict"] == "FAIL" for r in report.results):
            failed = True
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

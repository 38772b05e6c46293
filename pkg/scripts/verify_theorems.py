#!/usr/bin/env python3
"""Re-check every closed-form result against exhaustive computation.

Runs all verification suites at configurable bounds and prints one
line per suite.  Exits 1 if any suite reports a mismatch.

Example:
    python3 scripts/verify_theorems.py --max-m 3 --max-coeff 5 --max-k 5
"""

from __future__ import annotations

import argparse
import json
import sys

from linforms.theory import SUITES, SuiteBounds, verify_suite


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-coeff", type=int, default=4)
    parser.add_argument("--max-k", type=int, default=4)
    parser.add_argument("--diameter", type=int, default=None)
    parser.add_argument("--json", action="store_true", help="one JSON report per line")
    args = parser.parse_args(argv)

    bounds = SuiteBounds(
        max_m=args.max_m,
        max_coeff=args.max_coeff,
        max_k=args.max_k,
        diameter=args.diameter,
    )
    any_failed = False
    for suite in SUITES:
        report = verify_suite(suite, bounds)
        if args.json:
            print(json.dumps(report.to_json()))
        elif report.passed:
            print(f"suite {suite}: checked {report.checked}, passed")
        else:
            print(f"suite {suite}: checked {report.checked}, FAILED")
            for mismatch in report.mismatches:
                print(f"  mismatch: {mismatch}")
        any_failed = any_failed or not report.passed

    if any_failed:
        print("verification FAILED", file=sys.stderr)
    return 1 if any_failed else 0


if __name__ == "__main__":
    raise SystemExit(main())

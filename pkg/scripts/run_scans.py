#!/usr/bin/env python3
"""Scan the open-problem converses over a coefficient grid.

Writes one JSON finding per line to stdout and a status tally to
stderr.  Any candidate-counterexample or theorem-conflict line is
worth a close look: it names a form, a set size, and the conflicting
numbers.

Example:
    python3 scripts/run_scans.py --max-m 3 --max-coeff 6 --max-k 4
"""

from __future__ import annotations

import argparse
import collections
import json
import sys

from linforms.explorer import scan_ap_minimizer_converse, scan_completeness_converse

RUNNERS = {
    "completeness": scan_completeness_converse,
    "ap-minimizers": scan_ap_minimizer_converse,
}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-coeff", type=int, default=5)
    parser.add_argument("--max-k", type=int, default=4)
    parser.add_argument(
        "--problem", choices=[*RUNNERS, "all"], default="all", help="which converse to scan"
    )
    args = parser.parse_args(argv)

    names = list(RUNNERS) if args.problem == "all" else [args.problem]
    tally: collections.Counter[str] = collections.Counter()
    for name in names:
        for m in range(1, args.max_m + 1):
            for k in range(2, args.max_k + 1):
                for finding in RUNNERS[name](m, args.max_coeff, k):
                    print(json.dumps(finding.to_json()))
                    tally[finding.status] += 1

    summary = ", ".join(f"{count} {status}" for status, count in sorted(tally.items()))
    print(f"scan done: {summary}", file=sys.stderr)
    alarming = tally["candidate-counterexample"] + tally["theorem-conflict"]
    return 1 if alarming else 0


if __name__ == "__main__":
    raise SystemExit(main())

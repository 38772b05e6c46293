"""Command-line front end.

Exit codes: 0 success, 1 a verification suite failed, 2 malformed
input, 3 a capacity or node budget was exceeded.  All machine output is
JSON with integer values only, keys in a fixed order, one object per
line for scans and cache dumps.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cache_mod
from .engine import NfConfig, compute_mf, compute_nf, enumerate_minimizers
from .errors import InputError, ResourceError
from .explorer import scan_ap_minimizer_converse, scan_completeness_converse, spectrum
from .forms import parse_coeffs
from .sets import set_to_json
from .theory import SUITES, SuiteBounds, verify_suite


def _fmt_set(elems) -> str:
    return "{" + ",".join(map(str, elems)) + "}"


def cmd_nf(args: argparse.Namespace) -> int:
    f = parse_coeffs(args.coeffs)
    cfg = NfConfig(
        diameter=args.diameter,
        ladder_max_ell=args.ladder,
        node_budget=args.budget_nodes,
    )
    diameter = args.diameter if args.diameter is not None else f.u_total * (args.k - 1)

    if args.cache:
        rec = cache_mod.lookup(args.cache, f.coeffs, args.k, diameter)
        hit = rec is not None
        if rec is None:
            rec = cache_mod.record_from_result(compute_nf(f, args.k, cfg))
            cache_mod.append_record(args.cache, rec)
        if args.json:
            print(json.dumps(rec.to_json()))
        else:
            status = "exact" if rec.exact else f"bracket [{rec.lower},{rec.best}]"
            source = "cache hit" if hit else "computed"
            print(
                f"coeffs {f}  k={rec.k}  diameter {rec.diameter}: "
                f"min distinct values = {rec.best} ({status}; {source})"
            )
            for w in rec.witnesses:
                print(f"  minimizer {_fmt_set(w)}")
        return 0

    res = compute_nf(f, args.k, cfg)
    if args.json:
        print(json.dumps(res.to_json()))
    else:
        status = "exact" if res.exact else f"bracket [{res.lower},{res.best}]"
        print(
            f"coeffs {f}  k={res.k}  diameter {res.diameter_searched}: "
            f"min distinct values = {res.best} ({status})"
        )
        print(
            f"  lower {res.lower} via {res.certificate.kind} "
            f"(ell={res.certificate.ell}, lambda={res.certificate.lam}); "
            f"nodes {res.nodes_explored}"
        )
        suffix = " (list capped)" if res.witness_overflow else ""
        for w in res.witnesses:
            print(f"  minimizer {_fmt_set(w.elems)}{suffix}")
    return 0


def cmd_mf(args: argparse.Namespace) -> int:
    f = parse_coeffs(args.coeffs)
    res = compute_mf(f, args.k)
    if args.json:
        out = {"coeffs": list(f.coeffs), "k": args.k, "value": res.value, "base": res.base}
        out["witness"] = set_to_json(res.witness)["set"]
        print(json.dumps(out))
    else:
        print(
            f"coeffs {f}  k={args.k}: max distinct values = {res.value}, "
            f"witnessed by {_fmt_set(res.witness)} (base {res.base}, verified)"
        )
    return 0


def cmd_minimizers(args: argparse.Namespace) -> int:
    f = parse_coeffs(args.coeffs)
    mins = enumerate_minimizers(f, args.k, diameter=args.diameter)
    if args.json:
        diameter = args.diameter if args.diameter is not None else f.u_total * (args.k - 1)
        out = {
            "coeffs": list(f.coeffs),
            "k": args.k,
            "diameter": diameter,
            "minimizers": [list(w.elems) for w in mins],
        }
        print(json.dumps(out))
    else:
        print(f"coeffs {f}  k={args.k}: {len(mins)} minimizer(s) up to reflection")
        for w in mins:
            print(f"  {_fmt_set(w.elems)}")
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    f = parse_coeffs(args.coeffs)
    rep = spectrum(f, args.k, diameter=args.diameter)
    if args.json:
        print(json.dumps(rep.to_json()))
    else:
        print(
            f"coeffs {f}  k={rep.k}  diameter {rep.diameter}: "
            f"{len(rep.values)} image sizes, "
            f"{'an interval' if rep.is_interval else 'with gaps'}, "
            f"max {'reaches' if rep.mf_reached else 'misses'} the true maximum {rep.mf_value}"
        )
        for value, count in rep.census:
            print(f"  {value}: {count} class(es)")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = SuiteBounds(
        max_m=args.max_m,
        max_coeff=args.max_coeff,
        max_k=args.max_k,
        diameter=args.diameter,
    )
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    all_passed = True
    for name in suites:
        report = verify_suite(name, bounds)
        all_passed = all_passed and report.passed
        if args.json:
            print(json.dumps(report.to_json()))
        else:
            verdict = "passed" if report.passed else "FAILED"
            print(f"suite {name}: checked {report.checked}, {verdict}")
            for bad in report.mismatches:
                print(f"  mismatch: {bad}")
    return 0 if all_passed else 1


def cmd_scan(args: argparse.Namespace) -> int:
    problems = (
        ["completeness", "ap-minimizers"] if args.problem == "all" else [args.problem]
    )
    counts = {"consistent": 0, "candidate-counterexample": 0, "inconclusive": 0, "theorem-conflict": 0}
    for problem in problems:
        runner = (
            scan_completeness_converse
            if problem == "completeness"
            else scan_ap_minimizer_converse
        )
        for m in range(1, args.max_m + 1):
            for k in range(2, args.max_k + 1):
                for finding in runner(m, args.max_coeff, k, diameter=args.diameter):
                    counts[finding.status] = counts.get(finding.status, 0) + 1
                    print(json.dumps(finding.to_json()))
    print(
        "scan done: "
        + ", ".join(f"{v} {k}" for k, v in counts.items() if v),
        file=sys.stderr,
    )
    return 0


def cmd_cache_dump(args: argparse.Namespace) -> int:
    for rec in cache_mod.load_records(args.cache):
        print(json.dumps(rec.to_json()))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linforms",
        description="exact extremes of |f(A)| for positive integer linear forms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_form_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--coeffs", required=True, help="comma-separated coefficients, e.g. 1,2,3")
        p.add_argument("--k", required=True, type=int, help="set size")

    p_nf = sub.add_parser("nf", help="certified minimum number of distinct values")
    add_form_args(p_nf)
    p_nf.add_argument("--diameter", type=int, default=None, help="search diameter (default u_total*(k-1))")
    p_nf.add_argument("--ladder", type=int, default=4, help="largest bootstrapped exact size (default 4)")
    p_nf.add_argument("--budget-nodes", type=int, default=None, help="abort after this many search nodes")
    p_nf.add_argument("--cache", default=None, help="JSON-lines cache file")
    p_nf.add_argument("--json", action="store_true", help="machine output")
    p_nf.set_defaults(func=cmd_nf)

    p_mf = sub.add_parser("mf", help="exact maximum number of distinct values")
    add_form_args(p_mf)
    p_mf.add_argument("--json", action="store_true", help="machine output")
    p_mf.set_defaults(func=cmd_mf)

    p_min = sub.add_parser("minimizers", help="all minimizing k-sets (requires an exact value)")
    add_form_args(p_min)
    p_min.add_argument("--diameter", type=int, default=None)
    p_min.add_argument("--json", action="store_true", help="machine output")
    p_min.set_defaults(func=cmd_minimizers)

    p_sp = sub.add_parser("spectrum", help="census of attainable image sizes")
    add_form_args(p_sp)
    p_sp.add_argument("--diameter", type=int, default=None)
    p_sp.add_argument("--json", action="store_true", help="machine output")
    p_sp.set_defaults(func=cmd_spectrum)

    p_ver = sub.add_parser("verify", help="replay closed-form statements against the engine")
    p_ver.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p_ver.add_argument("--max-m", type=int, default=3)
    p_ver.add_argument("--max-coeff", type=int, default=4)
    p_ver.add_argument("--max-k", type=int, default=4)
    p_ver.add_argument("--diameter", type=int, default=None)
    p_ver.add_argument("--json", action="store_true", help="machine output")
    p_ver.set_defaults(func=cmd_verify)

    p_scan = sub.add_parser("scan", help="conjecture scans (JSON-lines findings on stdout)")
    p_scan.add_argument("--problem", choices=["completeness", "ap-minimizers", "all"], default="all")
    p_scan.add_argument("--max-m", type=int, default=3)
    p_scan.add_argument("--max-coeff", type=int, default=5)
    p_scan.add_argument("--max-k", type=int, default=4)
    p_scan.add_argument("--diameter", type=int, default=None)
    p_scan.set_defaults(func=cmd_scan)

    p_dump = sub.add_parser("cache-dump", help="print every cache record as JSON lines")
    p_dump.add_argument("--cache", required=True)
    p_dump.set_defaults(func=cmd_cache_dump)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

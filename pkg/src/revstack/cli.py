"""Command-line interface.

Verbs: sort, degree, pattern, zigzag, poly, table, verify, roots, count,
appendix.  Output is plain text by default; --format json emits the
schema-stable JSON forms, and --format csv is available for tables.

Exit status: 0 success / verified, 1 verification failure or mismatch,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import enumeration, patterns, zigzag
from .perms import (
    deg_revstack,
    deg_stack,
    format_permutation,
    iterate_revstack,
    iterate_stack,
    parse_permutation,
    reverse,
)
from .polynomials import (
    IntPoly,
    count_revstack_nm2,
    count_revstack_nm3,
    count_stack_nm2,
    count_stack_nm3,
    d_poly,
    eulerian_poly,
    format_poly,
    l_poly,
    narayana_poly,
    w_revstack_nm2,
    w_revstack_nm3,
)
from .roots import DEFAULT_WIDTH, real_roots

VERIFY_SUITES = ("steingrimsson", "theorems", "classification")

POLY_MAKERS = {
    "eulerian": eulerian_poly,
    "narayana": narayana_poly,
    "d": d_poly,
    "l": l_poly,
    "revstack-nm2": w_revstack_nm2,
    "revstack-nm3": w_revstack_nm3,
}

COUNT_MAKERS = {
    "revstack-nm2": count_revstack_nm2,
    "revstack-nm3": count_revstack_nm3,
    "stack-nm2": count_stack_nm2,
    "stack-nm3": count_stack_nm3,
}


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=1))


def _cmd_sort(args) -> int:
    word = parse_permutation(args.perm)
    if args.op == "reverse":
        out = reverse(word)
    elif args.op == "stack":
        out = iterate_stack(word, args.times)
    else:
        out = iterate_revstack(word, args.times)
    if args.format == "json":
        _print_json({"input": list(word), "op": args.op, "times": args.times,
                     "result": list(out)})
    else:
        print(format_permutation(out))
    return 0


def _cmd_degree(args) -> int:
    word = parse_permutation(args.perm)
    deg = deg_revstack(word) if args.sorter == "revstack" else deg_stack(word)
    if args.format == "json":
        _print_json({"input": list(word), "sorter": args.sorter, "degree": deg})
    else:
        print(deg)
    return 0


def _cmd_pattern(args) -> int:
    word = parse_permutation(args.perm)
    spec = patterns.parse_pattern(args.pattern)
    occ = patterns.contains_barred(word, spec)
    if args.format == "json":
        _print_json({
            "pattern": str(spec),
            "contains": occ is not None,
            "occurrence": occ.to_json() if occ else None,
        })
    elif occ is None:
        print(f"avoids {spec}")
    else:
        print(
            f"contains {spec}: values {format_permutation(occ.values)}"
            f" at positions {format_permutation(occ.positions)}"
        )
    return 0


def _cmd_zigzag(args) -> int:
    word = parse_permutation(args.perm)
    finder = zigzag.find_uninterrupted_zigzag if args.uninterrupted else zigzag.find_zigzag
    z = finder(word, args.k)
    if args.format == "json":
        _print_json({"k": args.k, "zigzag": z.to_json() if z else None})
    elif z is None:
        kind = "uninterrupted " if args.uninterrupted else ""
        print(f"no {kind}{args.k}-zigzag")
    else:
        state = "interrupted" if z.interrupted else "uninterrupted"
        print(f"{format_permutation(z.values)} ({state})")
    return 0


def _cmd_poly(args) -> int:
    p = POLY_MAKERS[args.which](args.n)
    if args.format == "json":
        _print_json(p.to_json())
    else:
        print(format_poly(p))
    return 0


def _get_table(n: int, sorter: str, jobs, cache_dir, use_cache: bool):
    if use_cache:
        return enumeration.cached_descent_table(n, sorter, jobs, cache_dir)
    return enumeration.descent_table(n, sorter, jobs)


def _cmd_table(args) -> int:
    table = _get_table(args.n, args.sorter, args.jobs, args.cache_dir, not args.no_cache)
    if args.format == "json":
        _print_json(table.to_json())
    elif args.format == "csv":
        print("t," + ",".join(f"x^{i}" for i in range(args.n + 1)) + ",count")
        for t in range(args.n):
            coeffs = [table.row(t)[i] for i in range(args.n + 1)]
            print(f"{t}," + ",".join(map(str, coeffs)) + f",{table.count(t)}")
    else:
        print(f"descent table for {args.sorter} sort on S_{args.n}")
        for t in range(args.n):
            print(f"t={t}: {format_poly(table.row(t))}  [{table.count(t)} permutations]")
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "steingrimsson":
        report = enumeration.verify_steingrimsson(args.n, args.jobs)
        if args.format == "json":
            _print_json(report.to_json())
        else:
            print(f"sortable-set sizes for n={args.n}")
            for row in report.rows:
                rel = "<" if row.strict else "="
                print(f"t={row.t}: stack {row.stack_count} {rel} revstack {row.revstack_count}")
            print("VERIFIED" if report.ok else "FAILED")
        return 0 if report.ok else 1
    if args.suite == "theorems":
        report = enumeration.verify_theorems(args.n, args.jobs)
        if args.format == "json":
            _print_json(report.to_json())
        else:
            for check in report.checks:
                mark = "PASS" if check.ok else "FAIL"
                extra = f"  ({check.counterexample})" if check.counterexample else ""
                print(f"{mark} {check.name}{extra}")
            print("VERIFIED" if report.ok else "FAILED")
        return 0 if report.ok else 1
    report = enumeration.classify_degree_nm2(args.n)
    if args.format == "json":
        _print_json(report.to_json())
    else:
        for name, size in report.sizes.items():
            print(f"class {name}: {size} permutations")
        print("VERIFIED" if report.ok else f"FAILED: {report.detail}")
    return 0 if report.ok else 1


def _cmd_roots(args) -> int:
    if args.coeffs is not None:
        coeffs = [int(c) for c in args.coeffs.split()]
        poly = IntPoly.from_coeffs(coeffs)
    else:
        if args.n is None or args.t is None:
            print("roots: provide either --coeffs or both --n and --t", file=sys.stderr)
            return 2
        table = _get_table(args.n, "revstack", args.jobs, args.cache_dir, not args.no_cache)
        poly = table.row(args.t)
    if poly.is_zero():
        print("roots: the zero polynomial has no root report", file=sys.stderr)
        return 2
    width = Fraction(args.width) if args.width else DEFAULT_WIDTH
    report = real_roots(poly, width)
    if args.format == "json":
        _print_json({"poly": poly.to_json(), "report": report.to_json()})
    else:
        print(format_poly(poly))
        print("roots:", ", ".join(report.approx_values()))
        print(f"all real: {report.all_real}; nonpositive: {report.nonpositive}")
    return 0


def _cmd_count(args) -> int:
    if args.what == "zigzag-free":
        if args.k is None:
            print("count zigzag-free requires --k", file=sys.stderr)
            return 2
        value = enumeration.count_zigzag_free(args.n, args.k, args.uninterrupted)
    else:
        value = COUNT_MAKERS[args.what](args.n)
    if args.format == "json":
        _print_json({"what": args.what, "n": args.n, "count": value})
    else:
        print(value)
    return 0


def _cmd_appendix(args) -> int:
    entries = None
    if args.golden:
        blob = json.loads(open(args.golden).read())
        if blob.get("format_version") != 1:
            print("appendix: unsupported golden file format", file=sys.stderr)
            return 2
        entries = blob["entries"]
    report = enumeration.reproduce_appendix(
        enumerate_max_n=args.max_n,
        jobs=args.jobs,
        entries=entries,
        cache_dir=args.cache_dir,
        use_cache=not args.no_cache,
    )
    if args.format == "json":
        _print_json(report.to_json())
    else:
        print(f"coefficients enumerated for n in {list(report.enumerated_n)}; "
              "roots checked for every listed entry")
        for m in report.mismatches:
            print(f"MISMATCH at (n={m.n}, t={m.t}): {m.what}")
        print("VERIFIED" if report.ok else "FAILED")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revstack",
        description="Exact combinatorics of stack and revstack sorting.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, fmt=("plain", "json"), jobs=False, cache=False):
        p.add_argument("--format", choices=fmt, default="plain")
        if jobs:
            p.add_argument("--jobs", type=int, default=None,
                           help="worker processes for sharded enumeration")
        if cache:
            p.add_argument("--cache-dir", default=None,
                           help=f"cache directory (default: ${enumeration.CACHE_ENV_VAR} "
                                "or the platform cache dir)")
            p.add_argument("--no-cache", action="store_true",
                           help="do not read or write the result cache")

    p = sub.add_parser("sort", help="apply a sorting operator")
    p.add_argument("--op", choices=("stack", "revstack", "reverse"), default="revstack")
    p.add_argument("--times", type=int, default=1)
    p.add_argument("perm")
    add_common(p)
    p.set_defaults(func=_cmd_sort)

    p = sub.add_parser("degree", help="number of passes needed to sort")
    p.add_argument("--sorter", choices=enumeration.SORTERS, default="revstack")
    p.add_argument("perm")
    add_common(p)
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("pattern", help="classical or barred pattern query")
    p.add_argument("--pattern", required=True, help='e.g. "2431" or "2 4 1 5! 3"')
    p.add_argument("perm")
    add_common(p)
    p.set_defaults(func=_cmd_pattern)

    p = sub.add_parser("zigzag", help="find a k-zigzag")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--uninterrupted", action="store_true")
    p.add_argument("perm")
    add_common(p)
    p.set_defaults(func=_cmd_zigzag)

    p = sub.add_parser("poly", help="named closed-form polynomial")
    p.add_argument("--which", choices=sorted(POLY_MAKERS), required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("table", help="descent table by exhaustive enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sorter", choices=enumeration.SORTERS, default="revstack")
    add_common(p, fmt=("plain", "json", "csv"), jobs=True, cache=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=VERIFY_SUITES, required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p, jobs=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("roots", help="exact real-root isolation")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--coeffs", help='ascending coefficients, e.g. "0 1 4 1"')
    p.add_argument("--width", help="isolation interval width (a rational, e.g. 1/100000)")
    add_common(p, jobs=True, cache=True)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("count", help="closed-form and zigzag-free counts")
    p.add_argument("--what", choices=sorted(COUNT_MAKERS) + ["zigzag-free"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="zigzag degree (zigzag-free only)")
    p.add_argument("--uninterrupted", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("appendix", help="reproduce the reference tables")
    p.add_argument("--max-n", type=int, default=8,
                   help="largest n to re-enumerate (roots are always checked)")
    p.add_argument("--golden", default=None, help="alternate golden data file")
    add_common(p, jobs=True, cache=True)
    p.set_defaults(func=_cmd_appendix)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

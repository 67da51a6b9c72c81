"""Command-line front end.

    bpaction plj --k 3 --ell 4 --j 0 --method division
    bpaction act --k 3 --j 0 --input tuples.txt
    bpaction verify --suite all
    bpaction census --k 3 --ell 4

Exit codes: 0 success, 1 verification failure, 2 usage or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import kernels
from .f2poly import to_json, to_text
from .plj import (DEFAULT_BUDGET, BudgetExceeded, PljQuery, odd_tuples,
                  p0_by_partitions, p0_by_surjections, p_by_division,
                  p_by_system, p_closed_ell_eq_k, p_closed_k3, parity_census)
from .verify import SUITES, Bounds, run_suite
from .zmodule import parse_index_line, vj_action

METHODS = ("division", "system", "thm2", "thm3", "thm4")


class UsageError(Exception):
    pass


def _compute_plj(k: int, ell: int, j: int, method: str, budget: int):
    try:
        PljQuery(k, ell, j)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if method == "division":
        return p_by_division(k, ell, j)
    if method == "system":
        return p_by_system(k, ell)[j]
    if method == "thm2":
        if k != 3:
            raise UsageError(f"method thm2 needs k = 3, got k={k}")
        return p_closed_k3(ell, j)
    if method == "thm3":
        if ell != k:
            raise UsageError(f"method thm3 needs ell = k, got ell={ell}, k={k}")
        return p_closed_ell_eq_k(k, j)
    if method == "thm4":
        if j != 0:
            raise UsageError(f"method thm4 needs j = 0, got j={j}")
        return p0_by_surjections(k, ell, budget)
    raise UsageError(f"unknown method {method}")


def cmd_plj(args, out) -> int:
    p = _compute_plj(args.k, args.ell, args.j, args.method, args.budget)
    print(to_json(p) if args.format == "json" else to_text(p), file=out)
    return 0


def cmd_act(args, out) -> int:
    if not 0 <= args.j <= args.k - 1:
        raise UsageError(f"need 0 <= j <= k-1, got j={args.j}, k={args.k}")
    stream = sys.stdin if args.input in (None, "-") else open(args.input, encoding="utf-8")
    with stream:
        lines = stream.read().splitlines()
    results = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            I = parse_index_line(line)
        except ValueError:
            raise UsageError(f"line {lineno}: cannot parse {line!r} as positive integers") from None
        if len(I) != args.k:
            raise UsageError(f"line {lineno}: expected {args.k} entries, got {len(I)}")
        results.append(vj_action(args.j, I))
    for element in results:
        print(element.to_json() if args.format == "json" else str(element), file=out)
    return 0


def cmd_census(args, out) -> int:
    census = parity_census(args.k, args.ell, args.budget)
    keys = sorted(census) if args.all else sorted(odd_tuples(census))
    rows = [{"tuple": list(n), "parity": census[n]} for n in keys]
    print(json.dumps(rows), file=out)
    return 0


def _suite_lines(name: str, bounds: Bounds) -> tuple[list[str], bool]:
    checks = run_suite(name, bounds)
    return [c.line() for c in checks], all(c.ok for c in checks)


def cmd_verify(args, out) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    bounds = Bounds(k_max=args.k_max, k=args.k, ell=args.ell, budget=args.budget, seed=args.seed)
    if args.workers > 1 and len(suites) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_suite_lines, suites, [bounds] * len(suites)))
    else:
        results = [_suite_lines(name, bounds) for name in suites]
    all_ok = True
    for name, (lines, ok) in zip(suites, results):
        for line in lines:
            print(line, file=out)
        print(f"{'PASS' if ok else 'FAIL'} suite {name} ({len(lines)} checks)", file=out)
        all_ok = all_ok and ok
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bpaction", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s (kernels: {kernels.BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plj", help="print p_{ell,j}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="division")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_plj)

    p = sub.add_parser("act", help="apply v_j to index tuples, one per line")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--input", "--indices-file", dest="input", default="-")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=2018)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="parity census of the column-sum tuples")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list even tuples as well")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, BudgetExceeded, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

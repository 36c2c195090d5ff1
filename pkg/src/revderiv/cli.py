"""Command-line front end.

Subcommands:

* ``derive``      print a derivative of a polynomial map
* ``verify``      run a law suite over a seeded random corpus
* ``partitions``  list the set partitions of {1..n}
* ``fdb``         evaluate a partition-sum chain rule against its oracle

Exit codes: 0 all checks passed, 1 a law or identity failed (a witness is
printed), 2 usage or parse error.  Variables in printed derivatives continue
the x-numbering after the input coordinates: for f over x1..xN the covector
or vector arguments start at x(N+1).  ``RFDB_SEED`` sets the default seed;
``--seed`` overrides it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corpus import CorpusConfig
from .combinators import partial_forward, partial_reverse
from .faa_di_bruno import fdb_report
from .laws import SUITE_NAMES, LawReport, run_suite
from .partitions import enumerate_partitions
from .syntax import ParseError, parse_map
from .towers import forward_tower, reverse_tower

DEFAULT_FDB_CAP = 4


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _fail_parse(err: ParseError) -> int:
    print(f"error: {err.message}", file=sys.stderr)
    print(err.caret_text(), file=sys.stderr)
    return 2


def _read_expr(text: str) -> str:
    if text == "-":
        return sys.stdin.read().strip()
    return text


def _parse_blocks(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        blocks = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad block list {text!r}")
    if not blocks or any(b < 0 for b in blocks):
        raise argparse.ArgumentTypeError(f"bad block list {text!r}")
    return blocks


def _default_seed() -> int:
    try:
        return int(os.environ.get("RFDB_SEED", "42"))
    except ValueError:
        return 42


def cmd_derive(args: argparse.Namespace) -> int:
    try:
        f = parse_map(_read_expr(args.map), args.blocks)
    except ParseError as err:
        return _fail_parse(err)
    if args.order < 0:
        return _fail_usage("--order must be nonnegative")
    try:
        if args.order == 0:
            result = f
        elif args.partial is not None:
            if args.order != 1:
                return _fail_usage("--partial applies to first derivatives (--order 1)")
            if args.mode == "reverse":
                result = partial_reverse(f, args.partial)
            else:
                result = partial_forward(f, args.partial)
        else:
            if f.domain.block_count != 1:
                return _fail_usage(
                    "total derivatives need a single-block domain; "
                    "use --partial J or declare one block"
                )
            tower = reverse_tower if args.mode == "reverse" else forward_tower
            result = tower(f, args.order)
    except (ValueError, IndexError) as err:
        return _fail_usage(str(err))
    if args.json:
        print(json.dumps({
            "map": str(result),
            "domain_blocks": list(result.domain.blocks),
            "codomain_dim": result.codomain_dim,
        }))
    else:
        print(result)
    return 0


def _print_report(report: LawReport) -> None:
    status = "ok" if report.ok else f"{len(report.failures)} failures"
    print(
        f"suite {report.suite}: seed {report.seed}, {report.cases} cases per law, "
        f"{len(report.laws)} laws, {status} ({report.elapsed_ms} ms)"
    )
    per_law = {law: 0 for law in report.laws}
    for failure in report.failures:
        per_law[failure.law] = per_law.get(failure.law, 0) + 1
    for law in report.laws:
        verdict = "ok" if per_law[law] == 0 else f"{per_law[law]} failures"
        print(f"  {law}: {report.cases} cases, {verdict}")
    for failure in report.failures:
        print(f"  FAIL {failure.law}")
        for m in failure.maps:
            print(f"    map: {m}")
        print(f"    lhs: {failure.lhs}")
        print(f"    rhs: {failure.rhs}")


def cmd_verify(args: argparse.Namespace) -> int:
    for name in ("cases", "max_dim", "max_deg", "max_order"):
        if getattr(args, name) < 1:
            return _fail_usage(f"--{name.replace('_', '-')} must be positive")
    cfg = CorpusConfig(
        max_dim=args.max_dim, max_degree=args.max_deg, max_order=args.max_order
    )
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, args.seed, args.cases, cfg) for name in names]
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if args.suite != "all" else payload, indent=2))
    else:
        for report in reports:
            _print_report(report)
    return 0 if all(r.ok for r in reports) else 1


def cmd_partitions(args: argparse.Namespace) -> int:
    if args.n < 1:
        return _fail_usage("n must be at least 1")
    parts = enumerate_partitions(args.n)
    if args.json:
        print(json.dumps({
            "n": args.n,
            "count": len(parts),
            "partitions": [[list(b) for b in p.blocks] for p in parts],
        }))
    else:
        for p in parts:
            print(p)
        print(f"count {len(parts)}")
    return 0


def cmd_fdb(args: argparse.Namespace) -> int:
    if args.n < 0:
        return _fail_usage("--n must be nonnegative")
    if args.n > args.max_n:
        return _fail_usage(
            f"--n {args.n} exceeds the cap {args.max_n}; raise --max-n if you mean it"
        )
    try:
        f = parse_map(_read_expr(args.f))
        g = parse_map(_read_expr(args.g))
    except ParseError as err:
        return _fail_parse(err)
    try:
        report = fdb_report(f, g, args.n, args.mode)
    except ValueError as err:
        return _fail_usage(str(err))
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(f"mode {report.mode}, n={report.order}: {len(report.summands)} summands")
        for s in report.summands:
            sizes = ",".join(str(k) for k in s.partition.block_sizes())
            print(f"  {s.partition}: sizes [{sizes}], map {s.result}")
        print(f"total:  {report.total}")
        print(f"oracle: {report.oracle}")
        if report.equal:
            print("verdict: equal")
        else:
            print(f"verdict: NOT equal ({report.first_difference})")
    return 0 if report.equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revderiv",
        description="Exact reverse/forward derivatives of polynomial maps "
                    "and their law suites.",
        epilog="exit codes: 0 = all checks passed, 1 = a law failed, 2 = usage/parse error",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_derive = sub.add_parser(
        "derive",
        help="differentiate a polynomial map",
        description="Print a derivative of a polynomial map in canonical text. "
                    "Derived argument blocks continue the x-numbering after the "
                    "input coordinates.",
    )
    p_derive.add_argument("--map", required=True,
                          help="map expression like '(x1^2, x1*x2)'; '-' reads stdin")
    p_derive.add_argument("--blocks", type=_parse_blocks, default=None, metavar="D1,D2,...",
                          help="domain block dimensions (default: one block)")
    p_derive.add_argument("--order", type=int, default=1,
                          help="derivative order; 0 echoes the canonical input")
    p_derive.add_argument("--mode", choices=("reverse", "forward"), default="reverse")
    p_derive.add_argument("--partial", type=int, default=None, metavar="J",
                          help="take the partial derivative in block J (1-based)")
    p_derive.add_argument("--json", action="store_true")
    p_derive.set_defaults(func=cmd_derive)

    p_verify = sub.add_parser(
        "verify",
        help="run law suites over a random corpus",
        description="Verify the combinator laws as exact map equalities over "
                    "seeded random polynomial maps; exits 1 on any failure.",
    )
    p_verify.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p_verify.add_argument("--seed", type=int, default=_default_seed(),
                          help="corpus seed (default: $RFDB_SEED or 42)")
    p_verify.add_argument("--cases", type=int, default=100)
    p_verify.add_argument("--max-dim", type=int, default=3)
    p_verify.add_argument("--max-deg", type=int, default=3)
    p_verify.add_argument("--max-order", type=int, default=3)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_parts = sub.add_parser(
        "partitions",
        help="list set partitions of {1..n}",
        description="Canonical enumeration (finest first, blocks ordered by minimum).",
    )
    p_parts.add_argument("n", type=int)
    p_parts.add_argument("--json", action="store_true")
    p_parts.set_defaults(func=cmd_partitions)

    p_fdb = sub.add_parser(
        "fdb",
        help="evaluate a partition-sum chain rule",
        description="Build the order-(n+1) derivative of g o f as a sum over "
                    "set partitions and compare it with the iterated-derivative "
                    "oracle; exits 1 if they differ.",
    )
    p_fdb.add_argument("--f", required=True, help="inner map expression")
    p_fdb.add_argument("--g", required=True, help="outer map expression")
    p_fdb.add_argument("--n", type=int, required=True,
                       help="order offset: checks the order-(n+1) derivative")
    p_fdb.add_argument("--mode", choices=("forward", "reverse"), required=True)
    p_fdb.add_argument("--max-n", type=int, default=DEFAULT_FDB_CAP,
                       help="safety cap on n (summand count grows fast)")
    p_fdb.add_argument("--json", action="store_true")
    p_fdb.set_defaults(func=cmd_fdb)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

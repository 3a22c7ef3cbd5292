"""Command-line interface: ``formagraph analyze | verify | catalog``.

Exit codes: 0 success, 1 an asserted check failed, 2 usage or parse error,
3 an order or lattice cap was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as C
from . import formations as FM
from . import lab
from . import report as R
from .errors import FormagraphError, LatticeCapExceeded, OrderCapExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _formation(text: str) -> FM.FormationSpec:
    try:
        return FM.parse_formation(text)
    except (ValueError, FormagraphError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="formagraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="report on one group and formation")
    a.add_argument("--group", required=True, help="builtin:NAME or file:PATH")
    a.add_argument("--formation", required=True, type=_formation)
    a.add_argument("--out", type=Path, help="write the JSON report here")
    a.add_argument("--dot", type=Path, help="write the non-F-graph as DOT")
    a.add_argument("--graphml", type=Path, help="write the non-F-graph as GraphML")
    a.add_argument("--include-isolated", action="store_true")
    a.add_argument("--no-cache", action="store_true", help="bypass the result cache")

    v = sub.add_parser("verify", help="run verification suites over the catalog")
    v.add_argument("--suite", action="append", required=True,
                   choices=list(lab.ALL_SUITES) + ["all"],
                   help="repeatable; 'all' runs the default suites")
    v.add_argument("--max-order", type=int, default=C.DEFAULT_MAX_ORDER)
    v.add_argument("--formation", action="append", type=_formation)
    v.add_argument("--group", action="append", help="restrict to these catalog groups")
    v.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: FORMAGRAPH_WORKERS or 1)")
    v.add_argument("--out", type=Path, help="write the JSON results here")
    v.add_argument("--no-timing", action="store_true", help="omit wall times from the JSON")

    c = sub.add_parser("catalog", help="list catalog groups")
    c.add_argument("--list", action="store_true", required=True)
    c.add_argument("--max-order", type=int, default=C.DEFAULT_MAX_ORDER)
    return parser


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        out.write_text(text + "\n", encoding="utf-8")


def cmd_analyze(args) -> int:
    G = C.resolve(args.group)
    cache = None if args.no_cache else R.ResultCache()
    rep = R.analyze(G, args.formation, cache=cache)
    _emit(rep.dumps(), args.out)
    if args.dot:
        R.export_graph(G, args.formation, "dot", args.dot, args.include_isolated)
    if args.graphml:
        R.export_graph(G, args.formation, "graphml", args.graphml, args.include_isolated)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = []
    for s in args.suite:
        for name in (lab.DEFAULT_SUITES if s == "all" else (s,)):
            if name not in suites:
                suites.append(name)
    results = [lab.run_suite(s, args.group, args.max_order, args.formation, args.workers)
               for s in suites]
    timing = not args.no_timing
    doc = [r.to_json(timing) for r in results]
    _emit(json.dumps(doc if len(doc) > 1 else doc[0], indent=2, sort_keys=True), args.out)
    for r in results:
        s = r.summary
        print(f"{r.suite}: {'ok' if r.ok else 'FAILED'} "
              f"({s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped, "
              f"{s['asserted_fail']} asserted failures, {r.wall_time:.1f}s)", file=sys.stderr)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_catalog(args) -> int:
    for name in C.default_catalog(args.max_order):
        print(f"{name}\t{C.lookup(name).order}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"analyze": cmd_analyze, "verify": cmd_verify, "catalog": cmd_catalog}
    try:
        return handler[args.command](args)
    except (OrderCapExceeded, LatticeCapExceeded) as exc:
        print(f"formagraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FormagraphError, ValueError, OSError) as exc:
        print(f"formagraph: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

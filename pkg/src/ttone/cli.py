"""Command-line interface: ``ttone <subcommand> ...``.

Exit status: 0 success, 1 invalid coloring or violated hypothesis, 2 bad
input, 3 solver limit reached.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import catalog as cat
from .bounds import upper_bounds
from .colorers import COLORERS, color_with
from .coloring import fmt_label, verify
from .errors import ColoringDefect, HypothesisViolated, InputError, LimitReached
from .exact import SolveOptions, exact_index
from .io import dump_coloring, from_edgelist, from_graph6, load_coloring, serialize_graph
from .search import SearchTask, enumerate_cubic, format_findings, run_search
from .structure import PATTERNS, classify

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="STRING", help="graph in graph6 format")
    src.add_argument("--edgelist", metavar="PATH", help="edge-list file ('-' for stdin)")
    src.add_argument("--name", help="catalog graph, e.g. petersen, cycle:7, star:4")


def _load_graph(args):
    if args.graph6 is not None:
        return from_graph6(args.graph6)
    if args.edgelist is not None:
        return from_edgelist(_read(args.edgelist))
    return cat.catalog(args.name)


def _default_node_limit() -> Optional[int]:
    raw = os.environ.get("TTONE_NODE_LIMIT")
    if not raw:
        return None
    try:
        val = int(raw)
    except ValueError:
        raise InputError(f"TTONE_NODE_LIMIT must be an integer, got {raw!r}") from None
    if val <= 0:
        raise InputError("TTONE_NODE_LIMIT must be positive")
    return val


def _node_limit(args) -> Optional[int]:
    return args.node_limit if args.node_limit is not None else _default_node_limit()


def cmd_color(args) -> int:
    g = _load_graph(args)
    out = color_with(g, args.strategy, planar=args.planar)
    extra = {"strategy": out.strategy, "fallback_used": out.fallback_used}
    if args.trace:
        extra["trace"] = [s.as_list() for s in out.trace]
    sys.stdout.write(dump_coloring(out.coloring, extra))
    print(f"k={out.k} strategy={out.strategy}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args)
    c = load_coloring(_read(args.coloring))
    if args.t is not None and args.t != c.t:
        raise InputError(f"--t {args.t} does not match the document's t = {c.t}")
    bad = verify(g, c)
    missing = sorted(set(g.edges) - set(c.assignment))
    for v in bad:
        print(f"violation\t{v.e}\t{v.e2}\tdistance={v.distance}\tshared={fmt_label(v.shared)}")
    for e in missing:
        print(f"uncolored\t{e}")
    if bad or missing:
        print(f"{len(bad)} violations, {len(missing)} uncolored edges", file=sys.stderr)
        return EXIT_INVALID
    print("valid")
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _load_graph(args)
    opts = SolveOptions(node_limit=_node_limit(args), time_limit=args.time_limit)
    res = exact_index(g, args.t, opts)
    if res.index is None:
        print(f"unknown: index >= {res.lower} (limit reached after {res.nodes} nodes)", file=sys.stderr)
        return EXIT_LIMIT
    print(res.index)
    sys.stdout.write(dump_coloring(res.witness))
    print(f"nodes={res.nodes}", file=sys.stderr)
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load_graph(args)
    rep = upper_bounds(g, args.t, planar=args.planar)
    if args.json:
        print(json.dumps(rep.as_dict(), indent=2))
    else:
        sys.stdout.write(rep.table())
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load_graph(args)
    print(json.dumps(classify(g).as_dict(), indent=2))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.cubic is not None:
        for g in enumerate_cubic(args.cubic):
            text = serialize_graph(g, args.format)
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
            if args.format == "edgelist":
                print()
        return EXIT_OK
    if args.name is None:
        raise InputError("gen needs --name or --cubic")
    text = serialize_graph(cat.catalog(args.name), args.format)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def _forbid_list(values: Sequence[str]) -> frozenset[str]:
    out = set()
    for v in values:
        out.update(x.strip().lower() for x in v.split(",") if x.strip())
    return frozenset(out)


def cmd_search(args) -> int:
    task = SearchTask(
        family=args.family, max_n=args.max_n, min_n=args.min_n, forbidden=_forbid_list(args.forbid),
        t=args.t, threshold=args.threshold, node_limit=_node_limit(args), workers=args.workers,
    )
    stream = None
    if args.input is not None:
        stream = _read(args.input).splitlines()
    report = run_search(task, stream)
    sys.stdout.write(format_findings(report))
    if args.witness_dir:
        os.makedirs(args.witness_dir, exist_ok=True)
        for i, f in enumerate(report.findings):
            if f.witness is not None:
                path = os.path.join(args.witness_dir, f"finding_{i:03d}.json")
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(dump_coloring(f.witness, {"graph6": f.graph}))
    print(
        f"examined={report.examined} filtered={report.filtered} "
        f"findings={len(report.findings)} max_index={report.max_index}",
        file=sys.stderr,
    )
    if any(f.index is None for f in report.findings):
        return EXIT_LIMIT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ttone", description="t-tone edge colorings of graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph with a constructive colorer")
    _add_input(p)
    p.add_argument("--strategy", default="auto", choices=["auto", *COLORERS])
    p.add_argument("--planar", action="store_true", help="assert the graph is planar")
    p.add_argument("--trace", action="store_true", help="include the step trace in the document")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring document against a graph")
    _add_input(p)
    p.add_argument("--coloring", required=True, metavar="PATH", help="JSON coloring ('-' for stdin)")
    p.add_argument("--t", type=int, help="expected tone (checked against the document)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact t-tone chromatic index")
    _add_input(p)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--node-limit", type=int, help="default: $TTONE_NODE_LIMIT")
    p.add_argument("--time-limit", type=float, metavar="SECONDS")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bounds", help="lower and upper bounds that apply")
    _add_input(p)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--planar", action="store_true", help="assert the graph is planar")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("classify", help="structural class membership")
    _add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="print a catalog graph or all cubic graphs of an order")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--name")
    src.add_argument("--cubic", type=int, metavar="N")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="exact indices over small cubic graphs")
    p.add_argument("--family", default="cubic", choices=["cubic"])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=4)
    p.add_argument("--forbid", action="append", default=[], help=f"one of {', '.join(PATTERNS)}")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--threshold", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--node-limit", type=int, help="default: $TTONE_NODE_LIMIT")
    p.add_argument("--input", metavar="PATH", help="graph6 stream to scan instead of enumerating")
    p.add_argument("--witness-dir", metavar="DIR", help="write a witness document per finding")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except LimitReached as exc:
        print(f"limit reached: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (HypothesisViolated, ColoringDefect) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

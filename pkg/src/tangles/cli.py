"""Command-line interface: ``tangles <command> ...``.

Exit codes: 0 on success, 1 on bad flags or unreadable input, 2 when
``validate`` is given a polystick that is not a Tangle dual graph.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import dualgraph as dg
from .dualgraph import DisconnectedInput, DualGraph, InvalidDualGraph
from .enumerator import count_tables, class_counts_from_table, default_workers, enumerate_by_class
from .geometry import GeometryConfig, render_svg, trace
from .grid import AXIS_CODES, AXIS_NAMES, Edge
from .growth import concat_area, concat_length, growth_estimates
from .polyomino import chan_polyomino, fleron_polyomino

MAX_SIZE_CEILING = 12


class DocumentError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# --- graph documents -------------------------------------------------------


def parse_graph(doc) -> DualGraph:
    """Build a graph from a decoded document; validity is not checked."""
    if not isinstance(doc, dict) or "edges" not in doc:
        raise DocumentError("graph document must be an object with an 'edges' list")
    raw = doc["edges"]
    if not isinstance(raw, list):
        raise DocumentError("'edges' must be a list")
    edges = set()
    for item in raw:
        if isinstance(item, dict):
            item = [item.get("x"), item.get("y"), item.get("dir")]
        if (not isinstance(item, (list, tuple)) or len(item) != 3
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in item[:2])
                or item[2] not in AXIS_CODES):
            raise DocumentError(f"bad edge {item!r}; expected [x, y, 'E'|'N']")
        edges.add(Edge(item[0], item[1], AXIS_CODES[item[2]]))
    if not edges:
        vertex = doc.get("vertex", [0, 0])
        if (not isinstance(vertex, (list, tuple)) or len(vertex) != 2
                or not all(isinstance(v, int) for v in vertex)):
            raise DocumentError("'vertex' must be [x, y]")
        return DualGraph.circle(tuple(vertex))
    return DualGraph(frozenset(edges))


def graph_document(g: DualGraph, **metadata) -> dict:
    doc = {"edges": [[e.x, e.y, AXIS_NAMES[e.axis]] for e in sorted(g.edges)]}
    if not g.edges:
        doc["vertex"] = [g.anchor.x, g.anchor.y]
    if metadata:
        doc["metadata"] = metadata
    return doc


def read_graph(path: str) -> DualGraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return parse_graph(json.loads(text))
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(str(exc)) from exc


def write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# --- tables ---------------------------------------------------------------


def table_csv(table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "c", "fixed", "one_sided", "free"])
    w.writerows(table.rows())
    return buf.getvalue()


def table_json(table) -> str:
    rows = [dict(zip(("m", "c", "fixed", "one_sided", "free"), r)) for r in table.rows()]
    return json.dumps({"max_size": table.m_max, "rows": rows}, indent=2) + "\n"


# --- commands -------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.max_size < 0:
        print("error: --max-size must be nonnegative", file=sys.stderr)
        return 1
    if args.max_size > MAX_SIZE_CEILING and not args.force:
        print(f"error: --max-size above {MAX_SIZE_CEILING} needs --force", file=sys.stderr)
        return 1
    table = count_tables(args.max_size, workers=args.threads)
    write_text(table_csv(table) if args.format == "csv" else table_json(table), args.out)
    return 0


def cmd_by_class(args) -> int:
    if args.cls < 1:
        print("error: --class must be a positive integer", file=sys.stderr)
        return 1
    cc = enumerate_by_class(args.cls, workers=args.threads)
    lo, hi = dg.edge_bounds(cc.c)
    if args.format == "json":
        print(json.dumps({"c": cc.c, "fixed": cc.fixed, "one_sided": cc.one_sided, "free": cc.free,
                          "sizes": [lo, hi], "complete": cc.complete,
                          "by_size": {str(m): list(v) for m, v in cc.by_size.items()}}, indent=2))
    else:
        print(f"class {cc.c}: fixed {cc.fixed}, one_sided {cc.one_sided}, free {cc.free}")
        print(f"sizes {lo}..{hi} enumerated ({'complete' if cc.complete else 'incomplete'})")
    return 0


def _load_valid(path: str) -> DualGraph:
    g = read_graph(path)
    if not dg.is_valid(g):
        raise InvalidDualGraph("input is not a Tangle dual graph")
    return g


def cmd_validate(args) -> int:
    try:
        g = read_graph(args.input)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        ok = dg.is_valid(g, method=args.method)
    except DisconnectedInput:
        print(f"invalid: edges are not connected (m={g.m})")
        return 2
    if not ok:
        print(f"invalid: a bounded face is not a unit square (m={g.m})")
        return 2
    print(f"valid: m={g.m} v={g.v} k={g.k} c={dg.class_of(g)} length={4 * dg.class_of(g)}")
    return 0


def cmd_render(args) -> int:
    g = _load_valid(args.input)
    cfg = GeometryConfig(r=args.radius)
    svg = render_svg(trace(g, cfg), cfg, graph=g, show_dual=args.show_dual,
                     show_packing=args.show_packing)
    write_text(svg, args.out)
    return 0


def cmd_polyomino(args) -> int:
    g = _load_valid(args.input)
    p = chan_polyomino(g) if args.kind == "chan" else fleron_polyomino(g)
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "cells": [list(c) for c in sorted(p.cells)],
                          "n": p.n, "perimeter": p.perimeter, "hole_free": p.is_holefree}, indent=2))
    else:
        print(f"{args.kind} polyomino: {p.n} cells, perimeter {p.perimeter}, "
              f"{'hole-free' if p.is_holefree else 'has holes'}")
        print(p.render())
    return 0


def cmd_growth(args) -> int:
    if args.max_size < 1 or (args.max_size > MAX_SIZE_CEILING and not args.force):
        print(f"error: --max-size must be in 1..{MAX_SIZE_CEILING} (or use --force)", file=sys.stderr)
        return 1
    table = count_tables(args.max_size, workers=args.threads)
    classes = {cc.c: cc for cc in class_counts_from_table(table)}
    for c in range(1, (args.max_class or 0) + 1):
        if c not in classes:
            classes[c] = enumerate_by_class(c, workers=args.threads)
    report = growth_estimates(table, [classes[c] for c in sorted(classes)])
    print(report.format())
    return 0 if report.ok else 2


def cmd_concat(args) -> int:
    g1, g2 = _load_valid(args.a), _load_valid(args.b)
    g = concat_area(g1, g2) if args.mode == "area" else concat_length(g1, g2)
    doc = graph_document(g, mode=args.mode, m=g.m, k=g.k, c=dg.class_of(g))
    write_text(json.dumps(doc) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    threads = argparse.ArgumentParser(add_help=False)
    threads.add_argument("--threads", type=int, default=None,
                         help="worker processes (default: $TANGLE_THREADS or 1)")

    p = _Parser(prog="tangles", description="Enumerate and draw planar Tangles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enumerate", parents=[threads], help="count table by size and class")
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out")
    s.add_argument("--force", action="store_true", help=f"allow --max-size above {MAX_SIZE_CEILING}")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("by-class", parents=[threads], help="complete counts for one class")
    s.add_argument("--class", dest="cls", type=int, required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_by_class)

    s = sub.add_parser("validate", help="check a graph document")
    s.add_argument("--input", required=True)
    s.add_argument("--method", choices=("faces", "cycles"), default="faces")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("render", help="draw a Tangle as SVG")
    s.add_argument("--input", required=True)
    s.add_argument("--out")
    s.add_argument("--radius", type=float, default=1.0)
    s.add_argument("--show-dual", action="store_true")
    s.add_argument("--show-packing", action="store_true")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("polyomino", help="Chan or Fleron polyomino of a graph")
    s.add_argument("--input", required=True)
    s.add_argument("--kind", choices=("chan", "fleron"), required=True)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_polyomino)

    s = sub.add_parser("growth", parents=[threads], help="root sequences and inequality checks")
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--max-class", type=int, default=None,
                   help="also enumerate classes up to this one completely")
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_growth)

    s = sub.add_parser("concat", help="join two graphs")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--mode", choices=("area", "length"), required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_concat)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "threads"):
        if args.threads is None:
            args.threads = default_workers()
        elif args.threads < 1:
            print("error: --threads must be positive", file=sys.stderr)
            return 1
    if getattr(args, "radius", 1.0) <= 0:
        print("error: --radius must be positive", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidDualGraph, DisconnectedInput) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

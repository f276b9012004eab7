"""Command-line front end.

    cdgraph check --degrees "1 2 3"
    cdgraph check --edges @graph.txt --format json
    cdgraph count 1_000_000
    cdgraph pairs 10
    cdgraph range 5
    cdgraph table1 --format csv
    cdgraph table2 --max-alpha 12
    cdgraph export-dot --degrees "1 6 10 15"

Graph sources are literal text, ``@path`` for a file or ``-`` for stdin.
Exit status is 0 on success, 1 for bad input and 2 if an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import counting, graph, palfy, tables


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_source(src: str, stdin) -> str:
    if src == "-":
        return stdin.read()
    if src.startswith("@"):
        try:
            with open(src[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {src[1:]}: {exc.strerror}") from None
    return src


def _load_graph(args, stdin) -> graph.PrimeGraph:
    if args.degrees is not None:
        return graph.build_graph(graph.parse_degrees(_read_source(args.degrees, stdin)))
    return graph.parse_edge_list(_read_source(args.edges, stdin))


def _record(fields: list[tuple[str, object]], fmt: str) -> str:
    """Render one flat record in the requested format."""
    if fmt == "json":
        return json.dumps(dict(fields), indent=2) + "\n"
    text = [(k, _text(v)) for k, v in fields]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([k for k, _ in text])
        w.writerow([v for _, v in text])
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| field | value |", "|---|---|"] + [f"| {k} | {v} |" for k, v in text]
        return "\n".join(lines) + "\n"
    width = max(len(k) for k, _ in text)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in text)


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return " ".join(_text(x) for x in v) if v else "-"
    return str(v)


def _check(args, stdin) -> str:
    g = _load_graph(args, stdin)
    comps = graph.connected_components(g)
    witness = palfy.find_independent_triple(g)
    verdict = palfy.classify(g)

    pair = inequality = reason = violation = None
    if isinstance(verdict, palfy.TwoCompleteComponents):
        pair, inequality = verdict.pair, verdict.inequality_holds
    elif isinstance(verdict, palfy.PalfyViolation):
        reason, violation = verdict.reason.value, sorted(verdict.witness)
    # the condition forces at most two complete components
    if witness is None and isinstance(verdict, palfy.PalfyViolation):
        raise AssertionError(f"condition holds but classify reported {reason}")

    if args.format == "json":
        fields = [
            ("vertices", sorted(g.vertices)),
            ("edges", [list(e) for e in g.sorted_edges()]),
            ("components", [sorted(c) for c in comps]),
            ("palfy_condition", witness is None),
            ("independent_triple", list(witness) if witness else None),
            ("classification", verdict.name),
            ("pair", [pair.a, pair.b] if pair else None),
            ("inequality", inequality),
            ("violation", reason),
            ("witness", violation),
        ]
    else:
        fields = [
            ("vertices", sorted(g.vertices)),
            ("edges", [f"{p}-{q}" for p, q in g.sorted_edges()]),
            ("components", ["{" + ",".join(map(str, sorted(c))) + "}" for c in comps]),
            ("palfy_condition", witness is None),
            ("independent_triple", list(witness) if witness else None),
            ("classification", verdict.name),
            ("pair", f"({pair.a},{pair.b})" if pair else None),
            ("inequality", inequality),
            ("violation", reason),
            ("witness", violation),
        ]
    return _record(fields, args.format)


def _scalar(name: str, value: int, fmt: str) -> str:
    if fmt == "plain":
        return f"{value}\n"
    return _record([(name, str(value) if fmt == "json" else value)], fmt)


def _count(args, stdin) -> str:
    n = counting.parse_order(args.n)
    return _scalar("c", counting.c_of_n(n), args.format)


def _rawcount(args, stdin) -> str:
    n = counting.parse_order(args.n)
    value = counting.raw_pair_count(n)
    if args.format == "json":
        return _record([("raw_pairs", str(value))], "json")
    return _scalar("raw_pairs", value, args.format)


def _pairs(args, stdin) -> str:
    pairs = counting.valid_pairs(counting.parse_order(args.n))
    if args.format == "json":
        return json.dumps([{"a": p.a, "b": str(p.b)} for p in pairs], indent=2) + "\n"
    if args.format == "csv":
        return "a,b\n" + "".join(f"{p.a},{p.b}\n" for p in pairs)
    if args.format == "markdown":
        return "| a | b |\n|---:|---:|\n" + "".join(f"| {p.a} | {p.b} |\n" for p in pairs)
    return "".join(f"{p.a} {p.b}\n" for p in pairs)


def _range(args, stdin) -> str:
    try:
        alpha = int(args.alpha)
    except ValueError:
        raise UsageError(f"alpha must be an integer, got {args.alpha!r}") from None
    r = counting.order_range_for_count(alpha)
    if r.size != (1 << alpha) + 1:
        raise AssertionError(f"range for alpha={alpha} has {r.size} members")
    big = str if args.format == "json" else (lambda v: v)
    return _record(
        [("alpha", alpha), ("min_n", big(r.min_n)), ("max_n", big(r.max_n)), ("count", big(r.size))],
        args.format,
    )


def _table1(args, stdin) -> str:
    if args.orders is None:
        orders = tables.TABLE1_ORDERS
    else:
        orders = [counting.parse_order(t) for t in args.orders.replace(",", " ").split()]
    rows = tables.table1(orders)
    return tables.render(rows, args.format, tables.Table1Row, thousands=args.thousands)


def _table2(args, stdin) -> str:
    rows = tables.table2(args.max_alpha)
    return tables.render(rows, args.format, tables.Table2Row, thousands=args.thousands)


def _export_dot(args, stdin) -> str:
    return graph.to_dot(_load_graph(args, stdin))


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=tables.FORMATS, default="plain")

    parser = _Parser(prog="cdgraph", description="Disconnected character degree graphs and Pálfy's inequality.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--degrees", help="degree list: text, @file or -")
        src.add_argument("--edges", help="edge list: text, @file or -")

    p = sub.add_parser("check", parents=[fmt], help="check a graph against Pálfy's condition")
    graph_source(p)
    p.set_defaults(func=_check)

    for name, func, help_ in (
        ("count", _count, "number of valid component pairs c(n)"),
        ("pairs", _pairs, "list the valid component pairs"),
        ("rawcount", _rawcount, "number of two-part splits floor(n/2)"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("n", help="graph order; '_' and ',' separators allowed")
        p.set_defaults(func=func)

    p = sub.add_parser("range", parents=[fmt], help="orders n with c(n) == alpha")
    p.add_argument("alpha")
    p.set_defaults(func=_range)

    p = sub.add_parser("table1", parents=[fmt], help="c(n) for a list of orders")
    p.add_argument("--orders", help="comma- or space-separated orders")
    p.add_argument("--thousands", action="store_true", help="group digits with commas")
    p.set_defaults(func=_table1)

    p = sub.add_parser("table2", parents=[fmt], help="order ranges for alpha = 1..k")
    p.add_argument("--max-alpha", type=int, default=tables.TABLE2_MAX_ALPHA)
    p.add_argument("--thousands", action="store_true", help="group digits with commas")
    p.set_defaults(func=_table2)

    p = sub.add_parser("export-dot", help="write the graph in Graphviz DOT")
    graph_source(p)
    p.set_defaults(func=_export_dot)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args, stdin)
    except (ValueError, TypeError) as exc:
        print(f"cdgraph: error: {exc}", file=stderr)
        return 1
    except AssertionError as exc:
        print(f"cdgraph: internal error: {exc}", file=stderr)
        return 2
    stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run())

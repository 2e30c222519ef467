"""Command-line front end: lie-ncg validate|analyze|export|verify|compare|enumerate."""

from __future__ import annotations

import argparse
import json
import sys

from . import graphs as graph_ops
from . import io as ncg_io
from . import verifier
from .errors import LieNcgError, ParseError
from .iso import isomorphism
from .liealg import algebra_from_spec
from .ncg import build_graph


def _load_algebra(path):
    spec = ncg_io.load_spec(path)
    return algebra_from_spec(spec)


def _emit_error(exc, as_json):
    payload = {"error": type(exc).__name__, "message": str(exc)}
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{payload['error']}: {payload['message']}", file=sys.stderr)


def cmd_validate(args):
    try:
        _load_algebra(args.path)
    except (LieNcgError, OSError) as exc:
        _emit_error(exc, args.format == "json")
        return 1
    if args.format == "json":
        print(json.dumps({"ok": True}))
    else:
        print("ok")
    return 0


def _algebra_facts(L, graph):
    center = L.center()
    histogram = {}
    for v in graph.vertices:
        c = L.centralizer_order(v)
        histogram[c] = histogram.get(c, 0) + 1
    return {
        "q": L.field.q,
        "dim": L.dim,
        "order": L.order,
        "center_order": center.cardinality,
        "derived_dim": L.derived_subalgebra().dim,
        "is_nilpotent": L.is_nilpotent(),
        "centralizer_order_histogram": {str(k): v for k, v in sorted(histogram.items())},
    }


def cmd_analyze(args):
    try:
        L = _load_algebra(args.path)
        graph = build_graph(L)
        report = graph_ops.property_report(graph)
    except (LieNcgError, OSError) as exc:
        _emit_error(exc, args.format == "json")
        return 1
    payload = {"algebra": _algebra_facts(L, graph), "graph": report.to_dict()}
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for section, values in payload.items():
            print(f"[{section}]")
            for key, value in values.items():
                print(f"  {key}: {value}")
    return 0


def cmd_export(args):
    try:
        L = _load_algebra(args.path)
        graph = build_graph(L)
    except (LieNcgError, OSError) as exc:
        _emit_error(exc, False)
        return 1
    render = {
        "dot": ncg_io.export_dot,
        "graphml": ncg_io.export_graphml,
        "json": ncg_io.export_json,
    }[args.out]
    text = render(graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args):
    try:
        if args.scope == "catalog":
            instances = verifier.catalog_instances()
        else:
            instances = verifier.enumeration_instances(args.n, args.q)
        ids = None if args.statement == "all" else [args.statement]
        reports = verifier.check_all_statements(instances, statement_ids=ids)
    except LieNcgError as exc:
        _emit_error(exc, args.format == "json")
        return 1
    failed = False
    for report in reports:
        failed = failed or report.status != "pass"
        if args.format == "json":
            print(json.dumps(report.to_dict(), sort_keys=True))
        else:
            print(
                f"{report.status.upper():4s} {report.statement_id}: {report.quote} "
                f"(checked {report.instances_checked}, vacuous {report.vacuous_count})"
            )
            for name, detail in report.failures:
                print(f"      failure: {name}: {detail}")
    return 1 if failed else 0


def cmd_compare(args):
    try:
        L1 = _load_algebra(args.path_a)
        L2 = _load_algebra(args.path_b)
        g1, g2 = build_graph(L1), build_graph(L2)
        witness = isomorphism(g1, g2)
        report = verifier.check_iso_theorems([("A", L1, "B", L2)])
    except (LieNcgError, OSError) as exc:
        _emit_error(exc, True)
        return 1
    payload = {
        "isomorphic": witness is not None,
        "witness": {g1.labels[k]: g2.labels[v] for k, v in witness.items()} if witness else None,
        "orders": [L1.order, L2.order],
        "center_orders": [L1.center().cardinality, L2.center().cardinality],
        "nilpotent": [L1.is_nilpotent(), L2.is_nilpotent()],
        "consequence_failures": [list(f) for f in report.failures],
        "notes": report.notes,
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if not report.failures else 1


def cmd_enumerate(args):
    try:
        summary = verifier.explore_conjecture(n_max=args.n, qs=tuple(args.q))
    except LieNcgError as exc:
        _emit_error(exc, True)
        return 1
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lie-ncg",
        description="Non-commuting graphs of finite-dimensional Lie algebras over F_q",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an algebra spec file")
    p.add_argument("path")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="full invariant report for one algebra")
    p.add_argument("path")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export", help="export the non-commuting graph")
    p.add_argument("path")
    p.add_argument("--out", choices=["dot", "graphml", "json"], default="dot")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="run registered statements over a scope")
    p.add_argument("--scope", choices=["catalog", "enumerate"], default="catalog")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--statement", default="all")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="graph isomorphism and its consequences")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("enumerate", help="conjecture exploration table")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", type=int, action="append", default=None)
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate" and args.q is None:
        args.q = [2]
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 property refuted (or certificate rejected),
2 usage error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .certificates import (
    CertificateError,
    dump_certificate,
    graph_report,
    load_certificate,
    nonexistence_certificate,
    packing_certificate,
    partition_certificate,
    report_certificate,
    verify_certificate,
    witness_certificate,
)
from .constructions import (
    bipartite_series,
    mader_tight,
    multigraph_counterexample,
    thm2_base,
    thm2_series,
    thm2_variant,
    thm6_construction,
)
from .decomposition import DecompositionError, decompose_edge, decompose_vertex
from .extraction import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    dense_extract,
    find_edge_connected_subgraph,
    find_vertex_connected_subgraph,
)
from .formats import GraphFormatError, to_dot, read_graph, write_graph
from .graph import Graph, build_basic, induced_subgraph
from .packing import pack_spanning_trees
from .penalty import PenaltyParams, edge_penalty_profile, vertex_penalty_total, weighted_penalty
from .suites import SUITES, run_suite

OK, REFUTED, USAGE, CAPPED = 0, 1, 2, 3

FAMILIES = ("thm2-base", "thm2-series", "thm2-variant", "bipartite-series", "multigraph",
            "mader-tight", "thm6", "basic")


class UsageError(Exception):
    pass


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required here")
    return value


def _emit(obj, out: str | None) -> None:
    if isinstance(obj, dict) and obj.get("format") == "highconn-certificate":
        text = dump_certificate(obj, out)
    else:
        text = json.dumps(obj, indent=1, sort_keys=True)
        if out:
            Path(out).write_text(text + "\n")
    if not out:
        print(text)


def _write_dot(path: str | None, g: Graph) -> None:
    if path:
        Path(path).write_text(to_dot(g))


def _construct(args) -> tuple[Graph, dict, dict]:
    """(graph, layout, claims) for the requested family."""
    fam = args.family
    if fam == "basic":
        g = build_basic(_need(args, "kind"), [int(x) for x in _need(args, "sizes").split(",")])
        return g, {}, {}
    k = _need(args, "k")
    if fam == "thm2-base":
        g, layout = thm2_base(k, split=args.split)
        return g, layout.as_dict(), {}
    if fam == "thm2-series":
        s = thm2_series(k)
        return s.graph, {**s.layout.as_dict(), "x_sizes": s.x_sizes()}, {"min_degree_at_least": 3 * k - 3}
    if fam == "thm2-variant":
        s = thm2_variant(k)
        return s.graph, {**s.layout.as_dict(), "x_sizes": s.x_sizes()}, {}
    if fam == "bipartite-series":
        s = bipartite_series(k)
        return s.graph, {"x_sizes": s.x_sizes()}, {"min_degree_at_least": 2 * k - 1}
    if fam == "multigraph":
        return multigraph_counterexample(k), {}, {"degrees_exactly": 2 * k - 1}
    if fam == "mader-tight":
        return mader_tight(_need(args, "n"), k), {"clique": list(range(k))}, {}
    if fam == "thm6":
        res = thm6_construction(k, args.C)
        layout = {"cross_cuts": res.cross_cuts, "A": [list(s.A) for s in res.states]}
        return res.graph, layout, {"min_degree_at_least": k + args.C * math.isqrt(k)}
    raise UsageError(f"unknown family {fam!r}")


def cmd_construct(args) -> int:
    g, layout, claims = _construct(args)
    if args.output:
        write_graph(g, args.output)
    if args.layout:
        Path(args.layout).write_text(json.dumps(layout, indent=1) + "\n")
    _write_dot(args.dot, g)
    report = graph_report(g, args.k, connectivity=not args.no_connectivity)
    cert = report_certificate(g, report, claims, params={"family": args.family, "k": args.k})
    _emit(cert, args.cert)
    try:
        verify_certificate(cert, g)
    except CertificateError as exc:
        print(f"refuted: {exc}", file=sys.stderr)
        return REFUTED
    return OK


def cmd_analyze(args) -> int:
    g = read_graph(args.graph)
    report = graph_report(g, args.k, connectivity=not args.no_connectivity)
    _emit(report_certificate(g, report, params={"k": args.k}), args.output)
    return OK


def cmd_extract(args) -> int:
    g = read_graph(args.graph)
    k = args.k
    params = {"k": k, "target": args.target}
    if args.target in ("vertex", "edge"):
        if args.target == "vertex":
            res = find_vertex_connected_subgraph(g, k, args.min_size, args.budget)
        else:
            res = find_edge_connected_subgraph(g, k)
        if res.found:
            cert = witness_certificate(g, args.target, k, res.witness, args.min_size if args.target == "vertex" else 0,
                                       params=params)
            _write_dot(args.dot, induced_subgraph(g, res.witness)[0])
        else:
            cert = nonexistence_certificate(g, res.trace, params=params)
            _write_dot(args.dot, g)
    elif args.target == "dense":
        try:
            out = dense_extract(g, k)
        except ValueError as exc:
            print(f"refuted: {exc}", file=sys.stderr)
            return REFUTED
        cert = witness_certificate(g, "dense", k, out.vertices, params=params)
        _write_dot(args.dot, out.subgraph)
    else:
        try:
            packing = pack_spanning_trees(g, k)
        except ValueError as exc:
            print(f"refuted: {exc}", file=sys.stderr)
            return REFUTED
        if packing.success:
            cert = packing_certificate(g, k, trees=packing.trees, params=params)
        else:
            cert = packing_certificate(g, k, partition=packing.partition, params=params)
        _write_dot(args.dot, g)
    _emit(cert, args.output)
    return OK


def cmd_verify(args) -> int:
    if args.what == "cert":
        if not args.graph:
            raise UsageError("verify cert needs CERT and GRAPH")
        cert = load_certificate(args.target)
        g = read_graph(args.graph)
        try:
            verify_certificate(cert, g)
        except CertificateError as exc:
            print(f"refuted: {exc}")
            return REFUTED
        print(f"ok: {cert['kind']} certificate replays")
        return OK
    if args.target not in SUITES:
        raise UsageError(f"unknown suite {args.target!r}; choose from {', '.join(SUITES)}")
    reports = run_suite(args.target, args.k, args.trials, args.seed, args.jobs, args.C, args.alpha, args.budget)
    status = OK
    for rep in reports:
        print(rep.summary())
        if rep.notes:
            print("  " + json.dumps(rep.notes, sort_keys=True))
        for fail in rep.failures:
            status = REFUTED
            print("  falsifying instance: " + json.dumps(fail, sort_keys=True))
    return status


def cmd_decompose(args) -> int:
    g = read_graph(args.graph)
    try:
        if args.mode == "edge":
            w = decompose_edge(g, args.s, args.t, args.seed)
            sizes = (0, 0)
        else:
            tf = args.mode == "triangle-free"
            w = decompose_vertex(g, args.s, args.t, triangle_free=tf, seed=args.seed)
            sizes = (0, 0) if tf else (2 * args.s, 2 * args.t)
    except DecompositionError as exc:
        print(f"refuted at stage {exc.stage}: {exc.message}", file=sys.stderr)
        return REFUTED
    _emit(partition_certificate(g, w, sizes, seed=args.seed, params={"s": args.s, "t": args.t, "mode": args.mode}),
          args.output)
    return OK


def cmd_penalty(args) -> int:
    g = read_graph(args.graph)
    k = args.k
    out = {"k": k, "vertex": {"values": list(vertex_penalty_total(g, k).values),
                              "total": vertex_penalty_total(g, k).total}}
    if args.alpha is not None:
        p = PenaltyParams(k, args.m, args.alpha) if args.m is not None else PenaltyParams.default(k, args.alpha)
        prof = edge_penalty_profile(g, p)
        out["edge"] = {"m": p.m, "alpha": p.alpha, "values": list(prof.values), "sum": prof.total,
                       "weighted": weighted_penalty(g, p) if g.n else 0.0}
    _emit(out, args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="highconn", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an extremal family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int, help="vertex count (mader-tight)")
    p.add_argument("--C", type=int, default=1, help="constant C (thm6)")
    p.add_argument("--split", action="store_true", help="split-clique base (thm2-base)")
    p.add_argument("--kind", help="basic graph kind")
    p.add_argument("--sizes", help="comma-separated sizes for basic graphs")
    p.add_argument("-o", "--output", help="graph file (JSON, or edge list for .txt/.edges/.el)")
    p.add_argument("--layout", help="write the layout JSON here")
    p.add_argument("--cert", help="write the report certificate here instead of stdout")
    p.add_argument("--dot", help="write a DOT rendering here")
    p.add_argument("--no-connectivity", action="store_true", help="skip kappa/lambda in the report")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="report degrees, connectivity and the peel core")
    p.add_argument("graph")
    p.add_argument("--k", type=int)
    p.add_argument("--no-connectivity", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extract", help="find a highly connected subgraph or certify none exists")
    p.add_argument("target", choices=("vertex", "edge", "dense", "trees"))
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--min-size", type=int, default=0, help="vertex mode: require more than this many vertices")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="subproblem cap for the vertex search")
    p.add_argument("-o", "--output")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="replay a certificate or run a check suite")
    p.add_argument("what", choices=("cert", "suite"))
    p.add_argument("target", help="certificate file, or suite name: " + ", ".join(SUITES))
    p.add_argument("graph", nargs="?")
    p.add_argument("--k", type=int)
    p.add_argument("--C", type=int, default=1)
    p.add_argument("--alpha", type=float)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="split V(G) into two highly connected parts")
    p.add_argument("graph")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=("vertex", "triangle-free", "edge"), default="vertex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("penalty", help="evaluate the degree-deficit penalties")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_penalty)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return CAPPED
    except (UsageError, GraphFormatError, CertificateError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


run = main

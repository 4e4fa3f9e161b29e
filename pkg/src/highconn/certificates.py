"""Certificate JSON: build, (de)serialize and replay.

A certificate is a JSON object

    {"format": "highconn-certificate", "version": 1, "kind": ...,
     "graph_hash": "sha256:...", "meta": {...}, "payload": {...}}

with ``kind`` one of witness, nonexistence, partition, packing, report.
:func:`verify_certificate` re-checks the payload against a graph without
rerunning the search that produced it; the embedded hash catches a graph
file that changed since the certificate was written.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .connectivity import (
    EdgeCut,
    Separation,
    edge_connectivity,
    is_k_plus_1_connected,
    is_k_plus_1_edge_connected,
    vertex_connectivity,
)
from .decomposition import DecompositionError, PartitionWitness, verify_partition
from .extraction import NonexistenceTrace, TraceError, TraceNode, peel, verify_trace
from .formats import graph_hash
from .graph import Graph, count_edges_within, induced_subgraph, is_bipartite, is_connected, is_triangle_free
from .packing import cross_edge_count, verify_tree_packing
from .penalty import vertex_penalty_total

FORMAT = "highconn-certificate"
VERSION = 1
KINDS = ("witness", "nonexistence", "partition", "packing", "report")
CONVENTIONS = {
    "vertex": "(k+1)-connected requires at least k+2 vertices",
    "edge": "(k+1)-edge-connected requires at least 2 vertices",
}


class CertificateError(ValueError):
    """The certificate is malformed or does not check out against the graph."""


def _tool_version() -> str:
    from . import __version__

    return __version__


def make_certificate(kind: str, g: Graph, payload: dict, seed: int | None = None,
                     params: dict | None = None) -> dict:
    if kind not in KINDS:
        raise ValueError(f"unknown certificate kind {kind!r}")
    return {
        "format": FORMAT,
        "version": VERSION,
        "kind": kind,
        "graph_hash": graph_hash(g),
        "meta": {
            "tool_version": _tool_version(),
            "seed": seed,
            "params": params or {},
            "conventions": CONVENTIONS,
        },
        "payload": payload,
    }


# -- traces ------------------------------------------------------------------

def _split_to_json(split) -> dict | None:
    if split is None:
        return None
    if isinstance(split, Separation):
        return {"type": "separation", "separator": list(split.separator),
                "side_a": list(split.side_a), "side_b": list(split.side_b)}
    return {"type": "edge_cut", "edges": [list(e) for e in split.edges],
            "side_a": list(split.side_a), "side_b": list(split.side_b)}


def _split_from_json(obj: dict | None):
    if obj is None:
        return None
    kind = obj.get("type")
    if kind == "separation":
        return Separation(tuple(obj["separator"]), tuple(obj["side_a"]), tuple(obj["side_b"]))
    if kind == "edge_cut":
        return EdgeCut(tuple(tuple(e) for e in obj["edges"]), tuple(obj["side_a"]), tuple(obj["side_b"]))
    raise CertificateError(f"unknown split type {kind!r}")


def node_to_json(node: TraceNode) -> dict:
    return {
        "vertices": list(node.vertices),
        "peeled": list(node.peeled),
        "verdict": node.verdict,
        "split": _split_to_json(node.split),
        "children": [node_to_json(c) for c in node.children],
    }


def node_from_json(obj: dict) -> TraceNode:
    return TraceNode(
        tuple(obj["vertices"]),
        tuple(obj.get("peeled", ())),
        obj.get("verdict"),
        _split_from_json(obj.get("split")),
        [node_from_json(c) for c in obj.get("children", [])],
    )


def trace_to_json(trace: NonexistenceTrace) -> dict:
    return {"mode": trace.mode, "k": trace.k, "min_size": trace.min_size, "root": node_to_json(trace.root)}


def trace_from_json(obj: dict) -> NonexistenceTrace:
    try:
        return NonexistenceTrace(obj["mode"], int(obj["k"]), int(obj["min_size"]), node_from_json(obj["root"]))
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"malformed trace: {exc}") from None


# -- builders ----------------------------------------------------------------

def witness_certificate(g: Graph, mode: str, k: int, vertices, min_size: int = 0, **meta) -> dict:
    payload = {"mode": mode, "k": k, "min_size": min_size, "vertices": sorted(vertices)}
    return make_certificate("witness", g, payload, **meta)


def nonexistence_certificate(g: Graph, trace: NonexistenceTrace, **meta) -> dict:
    payload = {"trace": trace_to_json(trace), "verdicts": trace.leaf_verdicts(), "nodes": trace.size()}
    return make_certificate("nonexistence", g, payload, **meta)


def partition_certificate(g: Graph, w: PartitionWitness, min_sizes=(0, 0), **meta) -> dict:
    payload = {"mode": "edge" if w.mode == "edge" else "vertex", "s": w.params.get("s"), "t": w.params.get("t"),
               "A": list(w.A), "B": list(w.B), "min_sizes": list(min_sizes), "history": list(w.history)}
    return make_certificate("partition", g, payload, **meta)


def packing_certificate(g: Graph, k: int, trees=None, partition=None, **meta) -> dict:
    if (trees is None) == (partition is None):
        raise ValueError("give exactly one of trees or partition")
    if trees is not None:
        payload = {"k": k, "success": True, "trees": [[list(e) for e in t] for t in trees]}
    else:
        payload = {"k": k, "success": False, "partition": [list(p) for p in partition]}
    return make_certificate("packing", g, payload, **meta)


def graph_report(g: Graph, k: int | None = None, connectivity: bool = True) -> dict:
    """Measured properties of ``g``; the same function re-checks report certificates."""
    out: dict[str, Any] = {
        "n": g.n,
        "num_edges": g.num_edges,
        "simple": not g.has_parallel_edges(),
        "min_degree": min(g.degrees, default=0),
        "max_degree": max(g.degrees, default=0),
        "triangle_free": is_triangle_free(g),
        "bipartite": is_bipartite(g),
        "connected": is_connected(g) if g.n else False,
    }
    if connectivity and g.n >= 2:
        out["kappa"] = vertex_connectivity(g)[0]
        out["lambda"] = edge_connectivity(g)[0]
    if k is not None:
        core = peel(g, k)
        out["k"] = k
        out["core_size"] = len(core.core_vertices)
        out["detachable"] = core.z
        out["vertex_penalty_total"] = vertex_penalty_total(g, k).total
    return out


def report_certificate(g: Graph, report: dict, claims: dict | None = None, **meta) -> dict:
    payload = {"properties": report, "claims": claims or {}}
    return make_certificate("report", g, payload, **meta)


# -- replay ------------------------------------------------------------------

def _check_claims(props: dict, claims: dict) -> None:
    for name, bound in claims.items():
        if name == "min_degree_at_least":
            if props["min_degree"] < bound:
                raise CertificateError(f"min degree {props['min_degree']} < claimed {bound}")
        elif name == "degrees_exactly":
            if props["min_degree"] != bound or props["max_degree"] != bound:
                raise CertificateError(f"degrees are not all {bound}")
        elif name == "n":
            if props["n"] != bound:
                raise CertificateError(f"n = {props['n']} != claimed {bound}")
        else:
            raise CertificateError(f"unknown claim {name!r}")


def _verify_witness(g: Graph, p: dict) -> None:
    mode, k, verts = p["mode"], int(p["k"]), p["vertices"]
    if len(set(verts)) != len(verts) or any(not 0 <= v < g.n for v in verts):
        raise CertificateError("witness vertex list is invalid")
    if len(verts) <= int(p.get("min_size", 0)):
        raise CertificateError(f"witness has {len(verts)} <= {p.get('min_size')} vertices")
    sub, _ = induced_subgraph(g, verts)
    if mode == "vertex":
        ok = is_k_plus_1_connected(sub, k)
    elif mode in ("edge", "dense"):
        ok = is_k_plus_1_edge_connected(sub, k)
        if mode == "dense" and count_edges_within(g, verts) <= k * (len(verts) - 1):
            raise CertificateError("dense witness is not dense enough")
    else:
        raise CertificateError(f"unknown witness mode {mode!r}")
    if not ok:
        raise CertificateError(f"witness is not ({k + 1})-{'edge-' if mode != 'vertex' else ''}connected")


def _verify_packing(g: Graph, p: dict) -> None:
    k = int(p["k"])
    if p.get("success"):
        trees = [[tuple(e) for e in t] for t in p["trees"]]
        if not verify_tree_packing(g, trees, k):
            raise CertificateError("trees are not k edge-disjoint spanning trees")
        return
    parts = [tuple(q) for q in p["partition"]]
    flat = [v for q in parts for v in q]
    if len(parts) < 2 or any(not q for q in parts) or sorted(flat) != list(range(g.n)):
        raise CertificateError("violator is not a partition of V(G)")
    if cross_edge_count(g, parts) >= k * (len(parts) - 1):
        raise CertificateError("partition has enough crossing edges; it does not block a packing")


def verify_certificate(cert: dict, g: Graph) -> dict:
    """Replay ``cert`` against ``g``; return a short summary or raise CertificateError."""
    if not isinstance(cert, dict) or cert.get("format") != FORMAT:
        raise CertificateError("not a highconn certificate")
    if cert.get("version") != VERSION:
        raise CertificateError(f"unsupported certificate version {cert.get('version')!r}")
    if cert.get("graph_hash") != graph_hash(g):
        raise CertificateError("graph hash mismatch: the graph differs from the one certified")
    kind, p = cert.get("kind"), cert.get("payload")
    if not isinstance(p, dict):
        raise CertificateError("missing payload")
    try:
        if kind == "witness":
            _verify_witness(g, p)
        elif kind == "nonexistence":
            verify_trace(g, trace_from_json(p["trace"]))
        elif kind == "partition":
            w = PartitionWitness(tuple(p["A"]), tuple(p["B"]), p["mode"])
            verify_partition(g, w, int(p["s"]), int(p["t"]), p["mode"], tuple(p.get("min_sizes", (0, 0))))
        elif kind == "packing":
            _verify_packing(g, p)
        elif kind == "report":
            props = p["properties"]
            fresh = graph_report(g, props.get("k"), connectivity="kappa" in props)
            diff = sorted(key for key in props if fresh.get(key) != props[key])
            if diff:
                raise CertificateError(f"reported properties do not match: {', '.join(diff)}")
            _check_claims(fresh, p.get("claims", {}))
        else:
            raise CertificateError(f"unknown certificate kind {kind!r}")
    except (TraceError, DecompositionError) as exc:
        raise CertificateError(str(exc)) from None
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CertificateError):
            raise
        raise CertificateError(f"malformed {kind} payload: {exc}") from None
    return {"kind": kind, "ok": True}


def dump_certificate(cert: dict, path: str | Path | None = None) -> str:
    text = json.dumps(cert, indent=1, sort_keys=True)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def load_certificate(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CertificateError(f"{path}: not valid JSON ({exc})") from None

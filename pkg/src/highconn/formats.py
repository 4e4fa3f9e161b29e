"""JSON and plain edge-list graph formats, plus write-only DOT export.

JSON: ``{"n": 3, "simple": true, "edges": [[0, 1], [1, 2]]}``.
Edge list: a header line ``n m simple01`` followed by ``m`` lines ``u v``.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Mapping

from .graph import Graph


class GraphFormatError(ValueError):
    pass


def to_json_obj(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "simple": g.simple, "edges": [list(e) for e in g.edges]}


def from_json_obj(obj: Mapping[str, Any]) -> Graph:
    try:
        n = obj["n"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphFormatError(f"graph JSON needs 'n' and 'edges': {exc}") from None
    simple = obj.get("simple", True)
    if not isinstance(n, int) or isinstance(n, bool) or not isinstance(simple, bool):
        raise GraphFormatError("'n' must be an integer and 'simple' a boolean")
    pairs = []
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"malformed edge {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph(n, tuple(pairs), simple)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def dumps(g: Graph, indent: int | None = None) -> str:
    return json.dumps(to_json_obj(g), indent=indent)


def loads(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    return from_json_obj(obj)


def canonical_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g), separators=(",", ":"), sort_keys=True)


def graph_hash(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(canonical_json(g).encode()).hexdigest()


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges} {int(g.simple)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("empty edge list")
    header = rows[0]
    if len(header) != 3 or header[2] not in ("0", "1"):
        raise GraphFormatError(f"malformed header {' '.join(header)!r}, expected 'n m simple01'")
    try:
        n, m = int(header[0]), int(header[1])
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError:
        raise GraphFormatError("non-integer token in edge list") from None
    if len(pairs) != len(rows) - 1:
        raise GraphFormatError("every edge line needs exactly two ids")
    if len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return Graph(n, tuple(pairs), header[2] == "1")
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def to_dot(g: Graph, labels: Mapping[int, str] | None = None, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in range(g.n):
        if labels and v in labels:
            out.append(f'  {v} [label="{labels[v]}"];')
        else:
            out.append(f"  {v};")
    out.extend(f"  {u} -- {v};" for u, v in g.edges)
    out.append("}")
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> Graph:
    """Load a graph file, sniffing JSON versus edge-list by its first character."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return loads(text)
    return parse_edge_list(text)


def write_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix in (".txt", ".edges", ".el"):
        path.write_text(to_edge_list(g))
    else:
        path.write_text(dumps(g) + "\n")

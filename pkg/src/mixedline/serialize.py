"""JSON and DOT encodings of :class:`~mixedline.core.MixedGraph`.

The JSON form is canonical: ``loads(dumps(g)) == g`` including vertex order,
edge order, ids and the stored order of each edge's endpoints.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import ARC, DIGON, Edge, MixedGraph


class GraphFormatError(ValueError):
    """Input is not a graph document of the expected shape."""


def to_dict(g: MixedGraph) -> dict[str, Any]:
    edges = []
    for e in g.edges:
        item: dict[str, Any] = {"id": e.id, "ends": list(e.ends), "kind": e.kind}
        if e.is_arc:
            item["tail"] = e.tail
            item["head"] = e.head
        edges.append(item)
    return {"vertices": list(g.vertices), "edges": edges}


def from_dict(doc: Any) -> MixedGraph:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise GraphFormatError("expected an object with 'vertices' and 'edges'")
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise GraphFormatError("'vertices' must be a list")
    edges = []
    for i, item in enumerate(doc.get("edges", [])):
        if not isinstance(item, dict):
            raise GraphFormatError(f"edge #{i} is not an object")
        ends = item.get("ends")
        if not isinstance(ends, list) or len(ends) != 2:
            raise GraphFormatError(f"edge #{i}: 'ends' must be a two-element list")
        u, v = (str(x) for x in ends)
        kind = item.get("kind", DIGON)
        eid = item.get("id")
        if eid is None:
            eid = f"{u}-{v}"
        if kind == ARC:
            if "tail" not in item or "head" not in item:
                raise GraphFormatError(f"edge {eid!r}: arc needs 'tail' and 'head'")
            edges.append(Edge(str(eid), (u, v), ARC, str(item["tail"]), str(item["head"])))
        elif kind == DIGON:
            edges.append(Edge(str(eid), (u, v)))
        else:
            raise GraphFormatError(f"edge {eid!r}: unknown kind {kind!r}")
    return MixedGraph(tuple(str(v) for v in verts), tuple(edges))


def dumps(g: MixedGraph, indent: int | None = None) -> str:
    return json.dumps(to_dict(g), indent=indent, ensure_ascii=False)


def loads(text: str) -> MixedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return from_dict(doc)


def load(path: str | Path) -> MixedGraph:
    return loads(Path(path).read_text(encoding="utf-8"))


def dumps_pretty(g: MixedGraph) -> str:
    """Readable variant of :func:`dumps`: one edge per line, same content."""
    doc = to_dict(g)
    head = json.dumps(doc["vertices"], ensure_ascii=False)
    if not doc["edges"]:
        return '{"vertices": ' + head + ', "edges": []}'
    body = ",\n  ".join(json.dumps(e, ensure_ascii=False) for e in doc["edges"])
    return '{"vertices": ' + head + ',\n "edges": [\n  ' + body + "\n ]}"


def save(g: MixedGraph, path: str | Path) -> None:
    Path(path).write_text(dumps_pretty(g) + "\n", encoding="utf-8")


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: MixedGraph, name: str = "G") -> str:
    """One ``digraph`` block; digons become edges with ``dir=none``."""
    lines = [f"digraph {_q(name)} {{"]
    for v in g.vertices:
        lines.append(f"  {_q(v)};")
    for e in g.edges:
        if e.is_arc:
            lines.append(f"  {_q(e.tail)} -> {_q(e.head)} [label={_q(e.id)}];")
        else:
            a, b = e.ends
            lines.append(f"  {_q(a)} -> {_q(b)} [dir=none, label={_q(e.id)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

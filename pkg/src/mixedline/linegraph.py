"""Undirected line graphs and the oriented (gamma / gamma^2) line graph of a mixed graph."""

from __future__ import annotations

from itertools import combinations

from .core import ARC, DIGON, Edge, MixedGraph, Variant, default_edge_id

# Local roles of two edges e1, e2 at their shared vertex -> edge produced in the
# gamma line graph.  "fwd" is an arc e1 -> e2, "back" an arc e2 -> e1.
# Rows of the construction table, plus their mirror images.
ORIENTATION_TABLE: dict[tuple[str, str], str] = {
    ("in", "out"): "fwd",
    ("out", "out"): DIGON,
    ("in", "in"): DIGON,
    ("in", DIGON): "back",
    ("out", DIGON): "fwd",
    (DIGON, DIGON): DIGON,
    ("out", "in"): "back",
    (DIGON, "in"): "fwd",
    (DIGON, "out"): "back",
}


def _adjacent_pairs(g: MixedGraph):
    """Pairs (e1, e2, v) of edges meeting at v, e1 before e2 in edge order."""
    idx = g.edge_index
    pairs = []
    for v in g.vertices:
        for e1, e2 in combinations(g.incident[v], 2):
            if idx[e1.id] > idx[e2.id]:
                e1, e2 = e2, e1
            pairs.append((e1, e2, v))
    pairs.sort(key=lambda t: (idx[t[0].id], idx[t[1].id]))
    return pairs


def _line_edge(a: str, b: str, kind: str, tail: str | None, head: str | None, taken: set) -> Edge:
    eid = default_edge_id(a, b)
    k = 2
    base = eid
    while eid in taken:
        eid = f"{base}#{k}"
        k += 1
    taken.add(eid)
    if kind == ARC:
        return Edge(eid, (a, b), ARC, tail, head)
    return Edge(eid, (a, b))


def undirected_line_graph(g: MixedGraph) -> MixedGraph:
    if not g.is_undirected:
        raise ValueError("undirected_line_graph expects an all-digon graph")
    taken: set[str] = set()
    edges = [_line_edge(e1.id, e2.id, DIGON, None, None, taken) for e1, e2, _ in _adjacent_pairs(g)]
    return MixedGraph(tuple(e.id for e in g.edges), tuple(edges))


def gamma_line_graph(d: MixedGraph, variant: Variant | str = Variant.GAMMA) -> MixedGraph:
    """Orientation of ``L(underlying(d))`` given by the construction table.

    With ``variant="gamma2"`` every produced arc is reversed.  Either way
    ``H^variant(result) == B*B - 2I`` for the gamma incidence matrix ``B``.
    """
    flip = Variant.parse(variant) is Variant.GAMMA2
    taken: set[str] = set()
    edges = []
    for e1, e2, v in _adjacent_pairs(d):
        res = ORIENTATION_TABLE[(e1.role_at(v), e2.role_at(v))]
        if res == DIGON:
            edges.append(_line_edge(e1.id, e2.id, DIGON, None, None, taken))
            continue
        tail, head = (e1.id, e2.id) if res == "fwd" else (e2.id, e1.id)
        if flip:
            tail, head = head, tail
        edges.append(_line_edge(e1.id, e2.id, ARC, tail, head, taken))
    return MixedGraph(tuple(e.id for e in d.edges), tuple(edges))


def line_edge_map(g: MixedGraph) -> dict[frozenset, str]:
    """Map each adjacent edge pair ``{e1, e2}`` of ``g`` to the vertex shared by them."""
    return {frozenset((e1.id, e2.id)): v for e1, e2, v in _adjacent_pairs(g)}

"""Brute-force enumeration of root orientations, used as ground truth in tests."""

from __future__ import annotations

import itertools
import os

from .core import ARC, Edge, MixedGraph, SizeBoundError
from .linegraph import gamma_line_graph, line_edge_map

DEFAULT_MAX_EDGES = 12

# incidence exponents (B = w**k) at (first endpoint, second endpoint) for the
# three orientations: digon, arc ends[0] -> ends[1], arc ends[1] -> ends[0]
_INCIDENCE = ((0, 0), (2, 1), (1, 2))


def max_edges() -> int:
    raw = os.environ.get("MIXEDLINE_MAX_EDGES")
    return int(raw) if raw else DEFAULT_MAX_EDGES


def orientations(g: MixedGraph):
    """Every mixed orientation of the undirected graph ``g`` (3**m of them)."""
    for choice in itertools.product(range(3), repeat=g.m):
        yield _orient(g, choice)


def _orient(g: MixedGraph, choice) -> MixedGraph:
    edges = []
    for e, c in zip(g.edges, choice):
        a, b = e.ends
        if c == 0:
            edges.append(Edge(e.id, e.ends))
        elif c == 1:
            edges.append(Edge(e.id, e.ends, ARC, a, b))
        else:
            edges.append(Edge(e.id, e.ends, ARC, b, a))
    return MixedGraph(g.vertices, tuple(edges))


def oracle_roots(y: MixedGraph, g: MixedGraph, limit: int | None = None) -> list[MixedGraph]:
    """All orientations ``x`` of ``g`` with ``gamma_line_graph(x)`` labelled-equal to ``y``.

    Each orientation is screened pair by pair with the incidence product
    ``conj(B[v, e1]) * B[v, e2]`` and survivors are confirmed by building the
    line graph.
    """
    bound = max_edges() if limit is None else limit
    if g.m > bound:
        raise SizeBoundError(f"{g.m} edges exceeds the oracle bound of {bound}")
    if sorted(e.id for e in g.edges) != sorted(y.vertices):
        return []
    pairs = line_edge_map(g)
    if set(pairs) != {frozenset(e.ends) for e in y.edges}:
        return []
    pos = g.edge_index
    checks = []
    for key, v in pairs.items():
        e1, e2 = sorted(key, key=pos.__getitem__)
        i, j = pos[e1], pos[e2]
        si = g.edges[i].ends.index(v)
        sj = g.edges[j].ends.index(v)
        target = y.h(e1, e2).exp
        checks.append((i, si, j, sj, target))
    out = []
    for choice in itertools.product(range(3), repeat=g.m):
        for i, si, j, sj, target in checks:
            if (_INCIDENCE[choice[j]][sj] - _INCIDENCE[choice[i]][si]) % 3 != target:
                break
        else:
            x = _orient(g, choice)
            if gamma_line_graph(x).same_labeled(y):
                out.append(x)
    out.sort(key=lambda x: x.labeled_key())
    return out

"""Root recovery: clique systems of line graphs and mixed root orientations.

Undirected roots come from complete clique systems (Krausz); mixed
orientations of a root are found by propagating incidence entries from one
seeded edge and then checking ``B*B == H(y) + 2I`` exactly.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field

from .core import (
    ARC,
    GAMMA,
    ONE,
    UNITS,
    Edge,
    MixedGraph,
    PreconditionError,
    SizeBoundError,
    UnitDiagonal,
    UnitRoot,
    bipartition,
    underlying_graph,
)
from .linegraph import line_edge_map
from .matrices import (
    ExactMatrix,
    conj_transpose,
    gamma_incidence,
    hermitian_adjacency,
    degree_matrix,
    mat_mul,
)

DEFAULT_MAX_VERTICES = 64


class LabelingError(PreconditionError):
    """The root's edge ids do not line up with the line graph's vertices."""


# -- clique systems -----------------------------------------------------------


@dataclass(frozen=True)
class CliqueSystem:
    graph: MixedGraph
    cliques: tuple[frozenset, ...]

    def violations(self) -> list[str]:
        """Failed conditions of a complete clique system (empty when valid)."""
        g = self.graph
        out = []
        adj = {v: set(g.neighbors(v)) for v in g.vertices}
        for i, q in enumerate(self.cliques):
            for x in q:
                if any(y != x and y not in adj[x] for y in q):
                    out.append(f"clique {i} is not complete")
                    break
        count = {v: 0 for v in g.vertices}
        for q in self.cliques:
            for x in q:
                count[x] += 1
        for v, c in count.items():
            if c != 2:
                out.append(f"vertex {v} lies in {c} cliques")
        for i in range(len(self.cliques)):
            for j in range(i + 1, len(self.cliques)):
                common = self.cliques[i] & self.cliques[j]
                if len(common) > 1:
                    out.append(f"cliques {i} and {j} share {len(common)} vertices")
                elif len(common) == 1:
                    (u,) = common
                    if len(self.cliques[i]) + len(self.cliques[j]) != len(adj[u]) + 2:
                        out.append(f"degree condition fails at {u}")
        for e in g.edges:
            a, b = e.ends
            if not any(a in q and b in q for q in self.cliques):
                out.append(f"edge {e.id} is not inside any clique")
        return out

    def key(self) -> tuple:
        return tuple(sorted(tuple(sorted(q)) for q in self.cliques))


def find_clique_systems(g: MixedGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[CliqueSystem]:
    """All complete clique systems of the undirected graph ``g``.

    Non-trivial cliques partition the edge set.  For an uncovered edge ``uv``
    with common neighbourhood ``W`` the clique through ``uv`` contains all of
    ``W`` except at most one vertex, which keeps the branching small.
    """
    if not g.is_undirected:
        raise PreconditionError("clique systems are defined for undirected graphs")
    if g.n > max_vertices:
        raise SizeBoundError(f"{g.n} vertices exceeds the bound of {max_vertices}")
    idx = g.vertex_index
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    edges = [tuple(e.ends) for e in g.edges]
    covered: set[frozenset] = set()
    uncovered_deg = {v: len(adj[v]) for v in g.vertices}
    count = {v: 0 for v in g.vertices}
    chosen: list[frozenset] = []
    found: dict[tuple, CliqueSystem] = {}

    def finish() -> None:
        cliques = list(chosen)
        for v in g.vertices:
            cliques.extend([frozenset((v,))] * (2 - count[v]))
        cliques.sort(key=lambda q: sorted(idx[x] for x in q))
        system = CliqueSystem(g, tuple(cliques))
        found.setdefault(system.key(), system)

    def search(start: int) -> None:
        pos = start
        while pos < len(edges) and frozenset(edges[pos]) in covered:
            pos += 1
        if pos == len(edges):
            finish()
            return
        u, v = edges[pos]
        common = sorted(adj[u] & adj[v], key=idx.__getitem__)
        options = [common] + [[w for w in common if w != x] for x in common]
        for extra in options:
            q = [u, v] + extra
            qset = frozenset(q)
            if any(count[x] >= 2 for x in q):
                continue
            pairs = [frozenset((a, b)) for i, a in enumerate(q) for b in q[i + 1:]]
            if any(b not in adj[a] for a, b in (tuple(p) for p in pairs)):
                continue
            if any(p in covered for p in pairs):
                continue
            covered.update(pairs)
            for x in q:
                count[x] += 1
                uncovered_deg[x] -= len(q) - 1
            chosen.append(qset)
            if all(uncovered_deg[x] == 0 for x in q if count[x] == 2):
                search(pos + 1)
            chosen.pop()
            for x in q:
                count[x] -= 1
                uncovered_deg[x] += len(q) - 1
            covered.difference_update(pairs)

    search(0)
    return list(found.values())


_TOKEN = re.compile(r"^([^-]+)-([^-]+)$")


def _natural(s: str):
    return (0, int(s), s) if s.lstrip("-").isdigit() else (1, 0, s)


def _root_names(system: CliqueSystem) -> list[str] | None:
    """Recover root vertex names from ``"a-b"`` style edge ids, if consistent."""
    tokens = {}
    for v in system.graph.vertices:
        m = _TOKEN.match(v)
        if not m or m.group(1) == m.group(2):
            return None
        tokens[v] = (m.group(1), m.group(2))
    names: list[str | None] = [None] * len(system.cliques)
    for i, q in enumerate(system.cliques):
        if len(q) >= 2:
            common = set.intersection(*(set(tokens[x]) for x in q))
            if len(common) != 1:
                return None
            names[i] = next(iter(common))
    for i, q in enumerate(system.cliques):
        if len(q) != 1:
            continue
        (x,) = q
        partner = [j for j, p in enumerate(system.cliques) if j != i and x in p]
        if len(partner) != 1:
            return None
        j = partner[0]
        if names[j] is None:
            # both cliques of x are trivial: an isolated edge
            a, b = tokens[x]
            names[i], names[j] = (a, b) if i < j else (b, a)
            continue
        rest = [t for t in tokens[x] if t != names[j]]
        if len(rest) != 1:
            return None
        names[i] = rest[0]
    if None in names or len(set(names)) != len(names):
        return None
    return names  # type: ignore[return-value]


def root_from_clique_system(s: CliqueSystem) -> MixedGraph:
    """Undirected root: a vertex per clique, an edge per line-graph vertex.

    The edge for line-graph vertex ``v`` has id ``v``.  Root vertices are
    named after the shared endpoint token when the ids look like ``"a-b"``
    and that naming is consistent; otherwise ``r0, r1, ...``.
    """
    names = _root_names(s)
    if names is None:
        names = [f"r{i}" for i in range(len(s.cliques))]
        order = list(range(len(names)))
    else:
        order = sorted(range(len(names)), key=lambda i: _natural(names[i]))
    rank = {i: r for r, i in enumerate(order)}
    member = {}
    for i, q in enumerate(s.cliques):
        for x in q:
            member.setdefault(x, []).append(i)
    edges = []
    for v in s.graph.vertices:
        i, j = sorted(member[v], key=rank.__getitem__)
        edges.append(Edge(v, (names[i], names[j])))
    return MixedGraph(tuple(names[i] for i in order), tuple(edges))


# -- mixed roots ----------------------------------------------------------------


@dataclass(frozen=True)
class RootCandidate:
    graph: MixedGraph
    incidence: ExactMatrix
    verified: bool
    vertex_orientation: UnitDiagonal | None = None
    edge_orientation: UnitDiagonal | None = None


def check_root_labeling(y: MixedGraph, g: MixedGraph) -> None:
    """Raise LabelingError unless ``L(g) == underlying(y)`` with edge id -> vertex id."""
    gids = [e.id for e in g.edges]
    if sorted(gids) != sorted(y.vertices):
        raise LabelingError("edge ids of the root do not match the line graph's vertices")
    want = set(line_edge_map(g))
    have = {frozenset(e.ends) for e in y.edges}
    if want != have:
        extra = sorted(tuple(sorted(p)) for p in have - want)
        missing = sorted(tuple(sorted(p)) for p in want - have)
        raise LabelingError(f"line graph adjacency mismatch: extra {extra[:3]}, missing {missing[:3]}")


def decode_orientation(g: MixedGraph, b: dict[tuple[str, str], UnitRoot]) -> MixedGraph:
    """Mixed orientation of ``g`` whose gamma incidence entries are ``b``."""
    edges = []
    for e in g.edges:
        x, z = e.ends
        val = b[(x, e.id)]
        if val == ONE:
            edges.append(Edge(e.id, e.ends))
        elif val == GAMMA:  # x is the head
            edges.append(Edge(e.id, e.ends, ARC, z, x))
        else:
            edges.append(Edge(e.id, e.ends, ARC, x, z))
    return MixedGraph(g.vertices, tuple(edges))


def _incidence_from(g: MixedGraph, b: dict[tuple[str, str], UnitRoot]) -> ExactMatrix:
    return ExactMatrix.from_cells(g.vertices, [e.id for e in g.edges], b)


def satisfies_line_identity(b: ExactMatrix, y: MixedGraph) -> bool:
    """Exact test of ``B*B == H(y) + 2I`` with ``y`` reindexed to B's columns."""
    cols = b.col_labels
    h = hermitian_adjacency(y).reindexed(cols, cols)
    return mat_mul(conj_transpose(b), b) == h + ExactMatrix.identity(cols, 2)


def construct_root_candidate(
    y: MixedGraph,
    g: MixedGraph,
    init_edge: str | None = None,
    init_value: UnitRoot = ONE,
) -> RootCandidate:
    """Propagate incidence entries from one seeded edge of ``g``, then verify.

    ``init_value`` is the entry of the initial edge's first endpoint; the
    other endpoint gets its conjugate.  Entries spread over a BFS of the edge
    adjacency of ``g`` via ``B[v, e2] = B[v, e1] * H(y)[e1, e2]`` at the shared
    vertex ``v``.
    """
    if not g.is_undirected:
        raise PreconditionError("the root must be given as an undirected graph")
    check_root_labeling(y, g)
    if not g.edges:
        return RootCandidate(g, ExactMatrix.zeros(g.vertices, []), True)
    first = g.edge_by_id[init_edge] if init_edge is not None else g.edges[0]
    b: dict[tuple[str, str], UnitRoot] = {}
    u, v = first.ends
    b[(u, first.id)] = init_value
    b[(v, first.id)] = init_value.conj()
    decided = {first.id}
    queue = deque([first])
    while queue:
        e1 = queue.popleft()
        for shared in e1.ends:
            for e2 in g.incident[shared]:
                if e2.id in decided:
                    continue
                val = b[(shared, e1.id)] * y.h(e1.id, e2.id)
                b[(shared, e2.id)] = val
                b[(e2.other(shared), e2.id)] = val.conj()
                decided.add(e2.id)
                queue.append(e2)
    if len(decided) != g.m:
        raise PreconditionError("root graph is not connected")
    mat = _incidence_from(g, b)
    return RootCandidate(decode_orientation(g, b), mat, satisfies_line_identity(mat, y))


def verify_gamma_incidence(r: ExactMatrix, x: MixedGraph) -> bool:
    """True iff ``r r* == H(x) + D``; such an ``r`` is then the gamma incidence matrix of ``x``."""
    if set(r.row_labels) != set(x.vertices) or set(r.col_labels) != {e.id for e in x.edges}:
        raise ValueError("pattern mismatch: labels differ from the graph")
    r = r.reindexed(x.vertices, [e.id for e in x.edges])
    for e in x.edges:
        for v in x.vertices:
            val = r[v, e.id]
            if v in e.ends:
                if val.as_unit() is None:
                    raise ValueError(f"pattern mismatch: entry ({v}, {e.id}) is not a cube root of unity")
            elif val:
                raise ValueError(f"pattern mismatch: entry ({v}, {e.id}) should be zero")
    ok = mat_mul(r, conj_transpose(r)) == hermitian_adjacency(x) + degree_matrix(x)
    if ok:
        assert r == gamma_incidence(x), "r r* = H + D but r is not the incidence matrix"
    return ok


def relate_roots(x1: RootCandidate, x2: RootCandidate) -> UnitDiagonal:
    """Diagonal ``D`` over root vertices with ``D @ B1 == B2``."""
    g1, g2 = x1.graph, x2.graph
    if underlying_graph(g1).labeled_key() != underlying_graph(g2).labeled_key():
        raise PreconditionError("candidates are orientations of different roots")
    b1, b2 = x1.incidence, x2.incidence.reindexed(x1.incidence.row_labels, x1.incidence.col_labels)
    vals = []
    for v in b1.row_labels:
        factor = None
        for c in b1.col_labels:
            p, q = b1[v, c].as_unit(), b2[v, c].as_unit()
            if p is None and q is None:
                continue
            assert p is not None and q is not None, "incidence patterns differ"
            f = q / p
            assert factor is None or factor == f, f"no diagonal relates the roots at {v}"
            factor = f
        vals.append((v, factor if factor is not None else ONE))
    d = UnitDiagonal(vals)
    assert mat_mul(d.to_matrix(), b1) == b2
    return d


@dataclass(frozen=True)
class RootDiagnostics:
    root: MixedGraph
    system: CliqueSystem
    bipartite: bool
    clique_condition: bool
    count: int


@dataclass
class RootSearch:
    roots: list[RootCandidate] = field(default_factory=list)
    reason: str | None = None
    per_root: list[RootDiagnostics] = field(default_factory=list)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __getitem__(self, i: int) -> RootCandidate:
        return self.roots[i]

    def graphs(self) -> list[MixedGraph]:
        return [r.graph for r in self.roots]


def mixed_roots(y: MixedGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> RootSearch:
    """Every mixed graph ``x`` with ``gamma_line_graph(x) == y`` (labelled).

    Each undirected root is tried with the three orientations of its first
    edge; only candidates passing the exact ``B*B`` test are returned.
    """
    from .monograph import clique_condition_for_system

    if y.n == 0:
        raise PreconditionError("the empty graph has no root to recover")
    if not y.is_connected():
        raise PreconditionError("underlying graph of y is disconnected; split components first")
    systems = find_clique_systems(underlying_graph(y), max_vertices)
    if not systems:
        return RootSearch([], "no clique system")
    result = RootSearch()
    seen: set = set()
    any_condition = False
    for s in systems:
        g = root_from_clique_system(s)
        cond = clique_condition_for_system(y, s)
        found = []
        if cond.ok:
            any_condition = True
            for seed in UNITS:
                cand = construct_root_candidate(y, g, None, seed)
                if cand.verified:
                    key = cand.graph.labeled_key()
                    if key not in seen:
                        seen.add(key)
                        found.append(cand)
        result.roots.extend(found)
        result.per_root.append(RootDiagnostics(g, s, bipartition(g) is not None, cond.ok, len(found)))
    if not result.roots:
        result.reason = "clique-cycle condition violated" if not any_condition else "no verified orientation"
    return result


def roots_report(search: RootSearch) -> dict:
    """JSON-ready summary of a root search."""
    from .serialize import to_dict

    return {
        "roots": [to_dict(r.graph) for r in search.roots],
        "reason": search.reason,
        "diagnostics": [
            {
                "root": to_dict(d.root),
                "bipartite": d.bipartite,
                "clique_condition": d.clique_condition,
                "count": d.count,
            }
            for d in search.per_root
        ],
    }

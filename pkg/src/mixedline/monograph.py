"""Walk values, stores and switching for mixed graphs, and root recovery via orientation matrices.

Conventions: the value of a walk is the product of Hermitian adjacency entries
along it, so stepping forward along an arc multiplies by the variant's weight.
Potentials transported from a base vertex satisfy ``p(y) = p(x) * H[x, y]``;
for a monograph the potentials form an orientation matrix ``O`` with
``O H O* == A(underlying)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ARC,
    ONE,
    Edge,
    MixedGraph,
    NotMonographError,
    PreconditionError,
    UnitDiagonal,
    UnitRoot,
    Variant,
    Walk,
    bfs_tree,
    underlying_graph,
)
from .linegraph import gamma_line_graph
from .matrices import incidence_unit
from .roots import (
    CliqueSystem,
    RootCandidate,
    _incidence_from,
    check_root_labeling,
    decode_orientation,
    find_clique_systems,
    satisfies_line_identity,
)

FULL_STORE = frozenset(UnitRoot(k) for k in range(3))
TRIVIAL_STORE = frozenset({ONE})


def walk_value(d: MixedGraph, w: Walk | list[str], variant: Variant | str = Variant.GAMMA) -> UnitRoot:
    alpha = Variant.parse(variant).alpha
    val = ONE
    verts = w.vertices if isinstance(w, Walk) else tuple(w)
    for a, b in zip(verts, verts[1:]):
        h = d.h(a, b, alpha)
        if h is None:
            raise ValueError(f"{a!r} and {b!r} are not adjacent")
        val = val * h
    return val


@dataclass(frozen=True)
class StoreResult:
    base_vertex: str
    potentials: dict[str, UnitRoot]
    store: frozenset
    witness_cycle: Walk | None = None
    witness_value: UnitRoot | None = None

    @property
    def trivial(self) -> bool:
        return self.store == TRIVIAL_STORE


def _tree_path(parent: dict[str, str | None], v: str) -> list[str]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])  # type: ignore[arg-type]
    return path[::-1]


def _fundamental_cycle(parent: dict[str, str | None], x: str, y: str) -> Walk:
    """Cycle formed by the chord ``x y`` and the tree paths, starting at their meeting vertex."""
    px, py = _tree_path(parent, x), _tree_path(parent, y)
    k = 0
    while k < min(len(px), len(py)) and px[k] == py[k]:
        k += 1
    top = px[k - 1]
    return Walk([top] + px[k:] + py[k:][::-1] + [top])


def compute_store(
    d: MixedGraph,
    u: str | None = None,
    seed: UnitRoot = ONE,
    variant: Variant | str = Variant.GAMMA,
) -> StoreResult:
    """Transport ``seed`` from ``u`` over a BFS tree and collect the chord cycle values.

    The store is ``{1}`` when every fundamental cycle has value 1 and the whole
    group of cube roots otherwise.
    """
    alpha = Variant.parse(variant).alpha
    if d.n == 0:
        raise PreconditionError("store of the empty graph")
    if not d.is_connected():
        raise PreconditionError("store is only defined for connected graphs")
    if u is None:
        u = d.vertices[0]
    parent, order, tree = bfs_tree(d, u)
    pot = {u: seed}
    for v in order[1:]:
        p = parent[v]
        pot[v] = pot[p] * d.h(p, v, alpha)  # type: ignore[index,operator]
    tree_ids = {e.id for e in tree}
    for e in d.edges:
        if e.id in tree_ids:
            continue
        x, y = e.ends
        val = pot[x] * e.h_value(x, y, alpha) * pot[y].conj()
        if val != ONE:
            cyc = _fundamental_cycle(parent, x, y)
            return StoreResult(u, pot, FULL_STORE, cyc, walk_value(d, cyc, variant))
    return StoreResult(u, pot, TRIVIAL_STORE)


def is_monograph(d: MixedGraph, variant: Variant | str = Variant.GAMMA) -> bool:
    if d.n == 0:
        return True
    return compute_store(d, variant=variant).trivial


def orientation_matrix(x: MixedGraph, u: str | None = None, seed: UnitRoot = ONE) -> UnitDiagonal:
    res = compute_store(x, u, seed)
    if not res.trivial:
        raise NotMonographError(f"not a monograph; cycle {list(res.witness_cycle)} has value {res.witness_value}")
    return UnitDiagonal((v, res.potentials[v]) for v in x.vertices)


def _edge_from_value(e: Edge, val: UnitRoot, alpha: UnitRoot) -> Edge:
    """Edge whose Hermitian entry at ``(ends[0], ends[1])`` is ``val``."""
    a, b = e.ends
    if val == ONE:
        return Edge(e.id, e.ends)
    if val == alpha:
        return Edge(e.id, e.ends, ARC, a, b)
    return Edge(e.id, e.ends, ARC, b, a)


def switch_with_diagonal(g: MixedGraph, o: UnitDiagonal, variant: Variant | str = Variant.GAMMA) -> MixedGraph:
    """The mixed graph ``x`` with ``H(x) = O* A(g) O``."""
    if not g.is_undirected:
        raise PreconditionError("switch_with_diagonal expects an undirected graph")
    alpha = Variant.parse(variant).alpha
    out = []
    for e in g.edges:
        a, b = e.ends
        out.append(_edge_from_value(e, o[a].conj() * o[b], alpha))
    return g.with_edges(out)


def switch_at_vertex(
    d: MixedGraph, v: str, factor: UnitRoot, variant: Variant | str = Variant.GAMMA
) -> MixedGraph:
    """Conjugate ``H`` by the diagonal that is ``factor`` at ``v`` and 1 elsewhere."""
    alpha = Variant.parse(variant).alpha
    out = []
    for e in d.edges:
        if v not in e.ends:
            out.append(e)
            continue
        a, b = e.ends
        val = e.h_value(a, b, alpha)
        val = factor * val if a == v else val * factor.conj()
        out.append(_edge_from_value(e, val, alpha))
    return d.with_edges(out)


def is_orientation_matrix(x: MixedGraph, o: UnitDiagonal) -> bool:
    return all(o[a] * e.h_value(a, b) * o[b].conj() == ONE for e in x.edges for a, b in [e.ends])


def edge_orientation_matrix(x: MixedGraph, o: UnitDiagonal) -> UnitDiagonal:
    """``O'[uv] = O[u] * B[u, uv]``; an orientation matrix of the gamma line graph."""
    if not is_orientation_matrix(x, o):
        raise PreconditionError("o is not an orientation matrix of x")
    out = []
    for e in x.edges:
        a, b = e.ends
        va = o[a] * incidence_unit(e, a, Variant.GAMMA.alpha)
        vb = o[b] * incidence_unit(e, b, Variant.GAMMA.alpha)
        assert va == vb, f"edge orientation ill-defined on {e.id}"
        out.append((e.id, va))
    return UnitDiagonal(out)


# -- line-graph conditions -----------------------------------------------------


@dataclass(frozen=True)
class CliqueConditionReport:
    ok: bool
    violating_clique: frozenset | None = None
    witness_cycle: Walk | None = None
    weight: UnitRoot | None = None
    system: CliqueSystem | None = None


def clique_condition_for_system(y: MixedGraph, system: CliqueSystem) -> CliqueConditionReport:
    """Each clique of ``system`` must induce a monograph in ``y``."""
    for q in system.cliques:
        if len(q) < 3:
            continue
        sub = y.induced(q)
        res = compute_store(sub)
        if not res.trivial:
            return CliqueConditionReport(False, q, res.witness_cycle, res.witness_value, system)
    return CliqueConditionReport(True, system=system)


def check_clique_cycle_condition(y: MixedGraph) -> CliqueConditionReport:
    """Necessary condition for ``y`` to be a gamma line graph.

    Passes when some complete clique system of ``underlying(y)`` has only
    monograph cliques; otherwise reports the first violation of the first
    system.
    """
    systems = find_clique_systems(underlying_graph(y))
    if not systems:
        raise PreconditionError("underlying graph is not a line graph")
    first = None
    for s in systems:
        rep = clique_condition_for_system(y, s)
        if rep.ok:
            return rep
        first = first or rep
    return first  # type: ignore[return-value]


def cycle_weight_pair(x: MixedGraph, c: Walk) -> tuple[UnitRoot, UnitRoot]:
    """Weight of cycle ``c`` in ``x`` and of its edge cycle in the gamma line graph."""
    if not c.is_cycle():
        raise ValueError("walk is not a cycle")
    verts = c.vertices
    ids = []
    for a, b in zip(verts, verts[1:]):
        e = x.edge_between(a, b)
        if e is None:
            raise ValueError(f"{a!r} and {b!r} are not adjacent")
        ids.append(e.id)
    line_cycle = Walk(ids + [ids[0]])
    return walk_value(x, c), walk_value(gamma_line_graph(x), line_cycle)


# -- root recovery from orientation matrices --------------------------------------


@dataclass(frozen=True)
class ChordViolation:
    """A non-tree edge ``xy`` where ``O[x] O[y] != O'[xy]^2``."""

    edge: str
    lhs: UnitRoot
    rhs: UnitRoot


def _tree_recursion(y: MixedGraph, g: MixedGraph, tree: list[Edge], root: str, seed: UnitRoot):
    """Vertex orientation ``O`` of the root and the seeded incidence entries on ``tree``."""
    y_orient = orientation_matrix(y)
    o = {root: seed}
    b: dict[tuple[str, str], UnitRoot] = {}
    pending = list(tree)
    progress = True
    while pending and progress:
        progress = False
        rest = []
        for e in pending:
            a, c = e.ends
            if a in o and c not in o:
                v1, v2 = a, c
            elif c in o and a not in o:
                v1, v2 = c, a
            else:
                rest.append(e)
                continue
            oe = y_orient[e.id]
            b[(v1, e.id)] = oe * o[v1].conj()
            b[(v2, e.id)] = b[(v1, e.id)].conj()
            o[v2] = oe * oe * o[v1].conj()
            progress = True
        pending = rest
    if len(o) != g.n:
        raise PreconditionError("tree does not span the root graph")
    return o, y_orient, b


def tree_root_recovery(y: MixedGraph, t: MixedGraph, seed: UnitRoot = ONE) -> RootCandidate:
    """Mixed orientation ``x`` of the tree ``t`` with ``gamma_line_graph(x) == y``."""
    if not t.is_undirected or not t.is_tree():
        raise PreconditionError("t must be an undirected tree")
    check_root_labeling(y, t)
    if not is_monograph(y):
        raise NotMonographError("y is not a monograph")
    if not t.edges:
        return RootCandidate(t, _incidence_from(t, {}), True)
    o, y_orient, b = _tree_recursion(y, t, list(t.edges), t.vertices[0], seed)
    x = decode_orientation(t, b)
    inc = _incidence_from(t, b)
    from .roots import verify_gamma_incidence

    assert verify_gamma_incidence(inc, x)
    verified = satisfies_line_identity(inc, y)
    assert verified, "recovered incidence fails B*B == H(y) + 2I"
    vo = UnitDiagonal((v, o[v]) for v in t.vertices)
    return RootCandidate(x, inc, verified, vo, y_orient)


def general_root_recovery(
    y: MixedGraph,
    g: MixedGraph,
    t: MixedGraph | None = None,
    seed: UnitRoot = ONE,
) -> RootCandidate | ChordViolation:
    """Recover a root on ``g`` by running the tree recursion on a spanning tree ``t``.

    Every chord ``xy`` must satisfy ``O[x] O[y] == O'[xy]^2``; the first that
    does not is returned as a :class:`ChordViolation`.
    """
    if not g.is_undirected:
        raise PreconditionError("g must be undirected")
    check_root_labeling(y, g)
    if not is_monograph(y):
        raise NotMonographError("y is not a monograph")
    if not g.edges:
        return RootCandidate(g, _incidence_from(g, {}), True)
    if t is None:
        _, _, tree = bfs_tree(g)
        root = g.vertices[0]
    else:
        ids = {e.id for e in g.edges}
        if not t.is_tree() or set(t.vertices) != set(g.vertices) or any(e.id not in ids for e in t.edges):
            raise PreconditionError("t is not a spanning tree of g")
        tree = [g.edge_by_id[e.id] for e in t.edges]
        root = t.vertices[0]
    o, y_orient, b = _tree_recursion(y, g, tree, root, seed)
    tree_ids = {e.id for e in tree}
    for e in g.edges:
        if e.id in tree_ids:
            continue
        a, c = e.ends
        lhs, rhs = o[a] * o[c], y_orient[e.id] * y_orient[e.id]
        if lhs != rhs:
            return ChordViolation(e.id, lhs, rhs)
        b[(a, e.id)] = y_orient[e.id] * o[a].conj()
        b[(c, e.id)] = y_orient[e.id] * o[c].conj()
        assert b[(a, e.id)] == b[(c, e.id)].conj()
    vo = UnitDiagonal((v, o[v]) for v in g.vertices)
    x = switch_with_diagonal(g, vo)
    inc = _incidence_from(g, b)
    assert decode_orientation(g, b) == x
    return RootCandidate(x, inc, satisfies_line_identity(inc, y), vo, y_orient)

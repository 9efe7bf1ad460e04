from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ARC, DIGON, path3
from mixedline.core import GAMMA, GAMMA2, ONE, UNITS, MixedGraph, PreconditionError, SizeBoundError, underlying_graph
from mixedline.generate import gen_random
from mixedline.linegraph import gamma_line_graph, undirected_line_graph
from mixedline.matrices import ExactMatrix, gamma_incidence
from mixedline.roots import (
    LabelingError,
    construct_root_candidate,
    find_clique_systems,
    mixed_roots,
    relate_roots,
    root_from_clique_system,
    roots_report,
    verify_gamma_incidence,
)

K3 = MixedGraph.build("abc", [("a", "b"), ("b", "c"), ("a", "c")])
CLAW = MixedGraph.build("cabd", [("c", "a"), ("c", "b"), ("c", "d")])
P2 = MixedGraph.build("ab", [("a", "b")])
Y_PATH = gamma_line_graph(path3(ARC, ARC))  # arc (u-v) -> (v-w)
P3 = path3()

THREE_ROOTS = [
    MixedGraph.build("uvw", [("u", "v", ARC), ("v", "w", ARC)]),
    MixedGraph.build("uvw", [("v", "u", ARC), ("v", "w")]),
    MixedGraph.build("uvw", [("u", "v"), ("w", "v", ARC)]),
]


def keys(graphs):
    return sorted(g.labeled_key() for g in graphs)


class TestCliqueSystems:
    def test_triangle_has_two(self):
        systems = find_clique_systems(K3)
        sizes = sorted(sorted(len(q) for q in s.cliques) for s in systems)
        assert sizes == [[1, 1, 1, 3], [2, 2, 2]]
        roots = sorted((root_from_clique_system(s) for s in systems), key=lambda g: g.n)
        assert [(r.n, r.m) for r in roots] == [(3, 3), (4, 3)]
        assert not roots[0].is_bipartite() and roots[1].is_tree()

    def test_claw_is_not_a_line_graph(self):
        assert find_clique_systems(CLAW) == []

    def test_single_edge(self):
        (s,) = find_clique_systems(P2)
        assert sorted(len(q) for q in s.cliques) == [1, 1, 2]
        root = root_from_clique_system(s)
        assert (root.n, root.m) == (3, 2) and root.is_tree()

    def test_fig3b_root_is_fig3a(self, fig3a, fig3b):
        systems = find_clique_systems(underlying_graph(fig3b))
        assert len(systems) == 1
        assert root_from_clique_system(systems[0]).same_labeled(fig3a)

    def test_rejects_arcs_and_large_inputs(self):
        with pytest.raises(PreconditionError):
            find_clique_systems(path3(ARC))
        with pytest.raises(SizeBoundError):
            find_clique_systems(K3, max_vertices=2)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(["connected", "tree", "cycle", "bipartite"]), st.integers(3, 9), st.integers(0, 10**6))
    def test_systems_of_line_graphs(self, kind, n, seed):
        g = underlying_graph(gen_random(kind, n, seed))
        lg = undirected_line_graph(g)
        systems = find_clique_systems(lg) if lg.n else []
        if lg.n:
            assert systems
        for s in systems:
            assert s.violations() == []
            root = root_from_clique_system(s)
            # edge ids of the root are the line graph's vertices
            assert undirected_line_graph(root).same_labeled(lg)


class TestConstruction:
    def test_arc_seed(self):
        c = construct_root_candidate(Y_PATH, P3, "u-v", GAMMA2)
        assert c.verified and c.graph.same_labeled(THREE_ROOTS[0])

    def test_digon_seed(self):
        c = construct_root_candidate(Y_PATH, P3, "u-v", ONE)
        assert c.verified and c.graph.same_labeled(THREE_ROOTS[2])

    def test_fig3_never_verifies(self, fig3a, fig3b):
        for seed in UNITS:
            assert not construct_root_candidate(fig3b, fig3a, None, seed).verified

    def test_labeling_mismatch(self):
        other = MixedGraph.build("uvw", [("u", "v", DIGON, "a"), ("v", "w", DIGON, "b")])
        with pytest.raises(LabelingError):
            construct_root_candidate(Y_PATH, other)


class TestMixedRoots:
    def test_fig2(self, fig2_root, fig2_lg):
        res = mixed_roots(fig2_lg)
        assert len(res) == 1 and res[0].graph.same_labeled(fig2_root)
        (diag,) = res.per_root
        assert not diag.bipartite and diag.count == 1

    def test_path_three_roots(self):
        res = mixed_roots(Y_PATH)
        assert keys(res.graphs()) == keys(THREE_ROOTS)
        assert all(r.verified for r in res)

    def test_fig3b_empty(self, fig3b):
        res = mixed_roots(fig3b)
        assert len(res) == 0 and res.reason == "clique-cycle condition violated"
        rep = roots_report(res)
        assert rep["roots"] == [] and rep["reason"] == "clique-cycle condition violated"

    def test_claw_has_no_clique_system(self):
        res = mixed_roots(CLAW)
        assert list(res) == [] and res.reason == "no clique system"

    def test_triangle_line_graph(self):
        # both Whitney roots of K3 are tried: the triangle and the star
        x = MixedGraph.build("012", [("0", "1"), ("1", "2"), ("0", "2")])
        res = mixed_roots(gamma_line_graph(x))
        assert any(r.graph.same_labeled(x) for r in res)
        counts = sorted((d.bipartite, d.count) for d in res.per_root)
        assert counts == [(False, 1), (True, 3)]

    def test_disconnected_rejected(self):
        with pytest.raises(PreconditionError):
            mixed_roots(MixedGraph.build("abcd", [("a", "b"), ("c", "d")]))


class TestVerifyIncidence:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 10**6))
    def test_true_incidence_verifies(self, n, seed):
        x = gen_random("connected", n, seed)
        assert verify_gamma_incidence(gamma_incidence(x), x)

    def test_perturbation_fails(self, fig2_root):
        b = gamma_incidence(fig2_root)
        cells = {(r, c): b[r, c] for r in b.row_labels for c in b.col_labels}
        cells[("0", "0-1")] = cells[("0", "0-1")] * GAMMA.to_scalar()
        bad = ExactMatrix.from_cells(b.row_labels, b.col_labels, cells)
        assert not verify_gamma_incidence(bad, fig2_root)

    def test_single_digon(self):
        assert verify_gamma_incidence(gamma_incidence(P2), P2)


class TestRelateRoots:
    def test_identical(self):
        c = construct_root_candidate(Y_PATH, P3, None, GAMMA)
        assert relate_roots(c, c).is_identity()

    def test_two_non_initial_roots(self):
        a = construct_root_candidate(Y_PATH, P3, "u-v", GAMMA2)
        b = construct_root_candidate(Y_PATH, P3, "u-v", GAMMA)
        d = relate_roots(a, b)
        assert {u for _, u in d.items()} <= {GAMMA, GAMMA2}

    def test_p4_alternates(self):
        g = MixedGraph.build("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
        x = MixedGraph.build("abcd", [("a", "b", ARC), ("b", "c"), ("d", "c", ARC)])
        y = gamma_line_graph(x)
        found = [construct_root_candidate(y, g, None, s) for s in UNITS]
        assert all(c.verified for c in found)
        d = relate_roots(found[0], found[1])
        vals = [d[v] for v in "abcd"]
        assert vals[0] == vals[2] and vals[1] == vals[3] and vals[0] == vals[1].conj() != ONE


def test_triangle_with_one_arc_uses_the_triangle_root():
    # the star system sees a triangle of weight w in its big clique and fails;
    # the triangle system has only edge cliques and yields the unique root
    x = MixedGraph.build("012", [("0", "1", ARC), ("1", "2"), ("0", "2")])
    res = mixed_roots(gamma_line_graph(x))
    assert len(res) == 1 and res[0].graph.same_labeled(x)
    conds = sorted((d.bipartite, d.clique_condition) for d in res.per_root)
    assert conds == [(False, True), (True, False)]

"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (also repeated in the pytest
terminal summary) and then asserts the criterion and its time bound.
"""

from __future__ import annotations

import json
import random
import time

from conftest import ACCEPTANCE_LINES, ARC, DIGON, cycle
from oracles import leibniz_char_poly
from mixedline.cli import main
from mixedline.core import UNITS, MixedGraph, UnitDiagonal, Walk, bfs_tree, underlying_graph
from mixedline.samples import fixture_path, load_fixture
from mixedline.generate import gen_random, random_orientation
from mixedline.linegraph import gamma_line_graph
from mixedline.matrices import (
    adjacency_01,
    char_poly,
    check_factorizations,
    check_line_charpoly,
    gamma_incidence,
    hermitian_adjacency,
    incidence_01,
    mat_mul,
)
from mixedline.monograph import (
    FULL_STORE,
    TRIVIAL_STORE,
    compute_store,
    cycle_weight_pair,
    edge_orientation_matrix,
    is_monograph,
    is_orientation_matrix,
    orientation_matrix,
    switch_at_vertex,
    switch_with_diagonal,
    tree_root_recovery,
)
from mixedline.oracle import oracle_roots
from mixedline.roots import mixed_roots
from mixedline.serialize import load


def record(number: int, title: str, ok: bool, elapsed: float, bound: float, detail: str = "") -> None:
    status = "PASS" if ok and elapsed < bound else "FAIL"
    line = f"{status} criterion {number}: {title} ({elapsed:.2f}s, bound {bound:g}s)"
    if detail:
        line += f" {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def cli_json(capsys, *argv) -> dict:
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    assert code == 0, err
    return json.loads(out)


def random_monograph(n: int, seed: int) -> MixedGraph:
    g = underlying_graph(gen_random("connected", n, seed))
    rng = random.Random(seed)
    return switch_with_diagonal(g, UnitDiagonal((v, rng.choice(UNITS)) for v in g.vertices))


def test_criterion_1_fig2_line_graph(tmp_path, capsys):
    t0 = time.perf_counter()
    out = tmp_path / "lg.json"
    code = main(["line-graph", "-i", str(fixture_path("fig2_root")), "-o", str(out)])
    capsys.readouterr()
    lg = load(out)
    want = load_fixture("fig2_lg")
    ok = code == 0 and (lg.n, lg.m) == (9, 19) and lg.same_labeled(want)
    elapsed = time.perf_counter() - t0
    record(1, "fig2_root line graph equals fig2_lg", ok, elapsed, 1.0, f"[{lg.n} vertices, {lg.m} edges]")
    assert ok and elapsed < 1.0


def test_criterion_2_fig3b_rejection(capsys):
    t0 = time.perf_counter()
    clique = {"0-1", "0-2", "0-4"}
    mono = cli_json(capsys, "monograph", "-i", fixture_path("fig3b"))
    roots = cli_json(capsys, "roots", "-i", fixture_path("fig3b"))
    cc = mono["clique_condition"]
    ok = (
        mono["monograph"] is False
        and set(mono["witness"]["cycle"]) <= clique
        and mono["witness"]["weight"] == "w2"
        and cc["ok"] is False
        and set(cc["violating_clique"]) == clique
        and set(cc["witness"]["cycle"]) <= clique
        and cc["witness"]["weight"] == "w2"
        and roots["roots"] == []
        and roots["reason"] == "clique-cycle condition violated"
    )
    elapsed = time.perf_counter() - t0
    record(2, "fig3b rejected, witness triangle of weight w2, no roots", ok, elapsed, 1.0)
    assert ok and elapsed < 1.0


def test_criterion_3_factorizations():
    t0 = time.perf_counter()
    failures = []
    for seed in range(200):
        x = gen_random("connected", 1 + seed % 10, seed)
        for variant in ("gamma", "gamma2"):
            rep = check_factorizations(x, variant)
            if not rep.ok:
                failures.append((seed, variant, rep.bstarb_witness, rep.bbstar_witness))
    elapsed = time.perf_counter() - t0
    record(3, "B*B = H(line graph)+2I and BB* = H+D, 200 graphs x 2 variants", not failures, elapsed, 10.0)
    assert not failures
    assert elapsed < 10.0


def _graph_for_roots(i: int) -> MixedGraph:
    kinds = ("connected", "tree", "connected", "bipartite", "cycle", "connected")
    kind = kinds[i % len(kinds)]
    attempt = 0
    while True:
        n = 4 + (i + attempt) % 5
        x = gen_random(kind, n, 1000 * i + attempt, extra=0.3)
        if 4 <= x.m <= 9:
            return x
        attempt += 1


def test_criterion_4_root_counts():
    t0 = time.perf_counter()
    problems = []
    bip = nonbip = 0
    for i in range(50):
        x = _graph_for_roots(i)
        y = gamma_line_graph(x)
        res = mixed_roots(y)
        g = underlying_graph(x)
        expected = []
        own = None
        for d in res.per_root:
            found = oracle_roots(y, d.root)
            expected.extend(found)
            if d.count != len(found):
                problems.append((i, "count differs from oracle", d.count, len(found)))
            if d.root.same_labeled(g):
                own = d
        if own is None:
            problems.append((i, "underlying root not found"))
            continue
        want = 3 if own.bipartite else 1
        bip += own.bipartite
        nonbip += not own.bipartite
        if own.count != want or own.bipartite != g.is_bipartite():
            problems.append((i, "root count", own.count, want))
        got = sorted(r.graph.labeled_key() for r in res)
        if got != sorted(e.labeled_key() for e in expected):
            problems.append((i, "set mismatch with oracle"))
        if x.labeled_key() not in got:
            problems.append((i, "x not among its roots"))
    elapsed = time.perf_counter() - t0
    ok = not problems and bip > 0 and nonbip > 0
    record(4, "3 roots per bipartite / 1 per non-bipartite root, equal to oracle", ok, elapsed, 60.0, f"[{bip} bipartite, {nonbip} non-bipartite]")
    assert not problems, problems[:5]
    assert bip > 0 and nonbip > 0
    assert elapsed < 60.0


def test_criterion_5_monograph_equivalence():
    t0 = time.perf_counter()
    mismatches = []
    seen = set()
    for seed in range(200):
        n = 2 + seed % 9
        x = random_monograph(n, seed) if seed % 2 else gen_random("connected", n, seed)
        a, b = is_monograph(x), is_monograph(gamma_line_graph(x))
        seen.add(a)
        if a != b:
            mismatches.append(seed)
    elapsed = time.perf_counter() - t0
    ok = not mismatches and seen == {True, False}
    record(5, "is_monograph(x) == is_monograph(line graph), 200 graphs", ok, elapsed, 10.0)
    assert not mismatches
    assert seen == {True, False}
    assert elapsed < 10.0


def test_criterion_6_tree_round_trip():
    t0 = time.perf_counter()
    problems = []
    for seed in range(100):
        x = gen_random("tree", 2 + seed % 11, seed)
        y = gamma_line_graph(x)
        t = underlying_graph(x)
        found = [tree_root_recovery(y, t, s) for s in UNITS]
        if not all(c.verified for c in found):
            problems.append((seed, "unverified"))
        if not any(c.graph.same_labeled(x) for c in found):
            problems.append((seed, "x not recovered"))
    elapsed = time.perf_counter() - t0
    record(6, "tree recovery from the line graph, 100 trees x 3 seeds", not problems, elapsed, 30.0)
    assert not problems
    assert elapsed < 30.0


def test_criterion_7_line_charpoly():
    t0 = time.perf_counter()
    problems = []
    for n in range(3, 9):
        for seed in range(5):
            x = random_orientation(cycle([DIGON] * n), f"{n}:{seed}")
            rep = check_line_charpoly(x, 2)
            lhs = char_poly(hermitian_adjacency(gamma_line_graph(x)))
            rhs = char_poly(hermitian_adjacency(x))
            if not (rep.applicable and rep.ok and lhs == rhs):
                problems.append((n, seed))
    digons = hermitian_adjacency(cycle([DIGON] * 3))
    one_arc = hermitian_adjacency(cycle([ARC, DIGON, DIGON]))
    anchors = (
        char_poly(digons).coefficients == (1, 0, -3, -2)
        and leibniz_char_poly(digons) == [1, 0, -3, -2]
        and char_poly(one_arc).coefficients == (1, 0, -3, 1)
        and leibniz_char_poly(one_arc) == [1, 0, -3, 1]
    )
    elapsed = time.perf_counter() - t0
    ok = not problems and anchors
    record(7, "char poly of line graph equals root's on mixed cycles; C3 anchors", ok, elapsed, 5.0)
    assert not problems
    assert anchors
    assert elapsed < 5.0


def _random_cycle_walk(x: MixedGraph, rng: random.Random) -> Walk | None:
    parent, _, tree = bfs_tree(x)
    tree_ids = {e.id for e in tree}
    chords = [e for e in x.edges if e.id not in tree_ids]
    if not chords:
        return None
    a, b = rng.choice(chords).ends

    def up(v):
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    pa, pb = up(a), up(b)
    common = next(v for v in pa if v in set(pb))
    walk = pa[: pa.index(common) + 1] + pb[: pb.index(common)][::-1] + [a]
    return Walk(walk)


def test_criterion_8_property_suites():
    t0 = time.perf_counter()
    fails: dict[str, int] = {}

    def check(name: str, cond: bool) -> None:
        if not cond:
            fails[name] = fails.get(name, 0) + 1

    rng = random.Random(8)
    cycles_checked = 0
    for seed in range(100):
        n = 2 + seed % 8
        x = gen_random("connected", n, seed)
        # store is a subgroup and does not depend on the base vertex
        stores = {compute_store(x, v, rng.choice(UNITS)).store for v in x.vertices}
        check("store subgroup", len(stores) == 1 and stores <= {TRIVIAL_STORE, FULL_STORE})

        m = random_monograph(n, seed)
        o = orientation_matrix(m, rng.choice(m.vertices), rng.choice(UNITS))
        om = o.to_matrix()
        check("O H O* = A", mat_mul(mat_mul(om, hermitian_adjacency(m)), om.H) == adjacency_01(underlying_graph(m)))
        check("switch back", switch_with_diagonal(underlying_graph(m), o) == m)
        g = m
        for v in m.vertices:
            g = switch_at_vertex(g, v, o[v])
        check("switch to underlying", g == underlying_graph(m))
        v, f = rng.choice(x.vertices), rng.choice(UNITS)
        check("vertex switch round trip", switch_at_vertex(switch_at_vertex(x, v, f), v, f.conj()) == x)

        op = edge_orientation_matrix(m, o)
        prod = mat_mul(mat_mul(om, gamma_incidence(m)), op.to_matrix().H)
        check("O B O'* = |B|", prod == incidence_01(underlying_graph(m)))
        check("O' orients line graph", is_orientation_matrix(gamma_line_graph(m), op))

        walk = _random_cycle_walk(x, rng)
        if walk is not None:
            for w in (walk, walk.reversed()):
                a, b = cycle_weight_pair(x, w)
                check("cycle weight", a == b)
                cycles_checked += 1
    for n in range(3, 9):
        for seed in range(4):
            c = random_orientation(cycle([DIGON] * n), f"w{n}:{seed}")
            w = Walk([str(i) for i in range(n)] + ["0"])
            for ww in (w, w.reversed()):
                a, b = cycle_weight_pair(c, ww)
                check("cycle weight", a == b)
                cycles_checked += 1
    elapsed = time.perf_counter() - t0
    ok = not fails and cycles_checked > 0
    record(8, "store, orientation matrix, switching, edge orientation, cycle weights", ok, elapsed, 20.0, f"[{cycles_checked} cycle traversals]")
    assert not fails, fails
    assert elapsed < 20.0

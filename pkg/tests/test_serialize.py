from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedline.core import ARC, MixedGraph
from mixedline.generate import KINDS, gen_random
from mixedline.serialize import GraphFormatError, dumps, dumps_pretty, from_dict, loads, to_dict, to_dot


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(KINDS), st.integers(3, 10), st.integers(0, 10**6))
def test_round_trip_is_exact(kind, n, seed):
    g = gen_random(kind, n, seed)
    assert loads(dumps(g)) == g
    assert loads(dumps_pretty(g)) == g


def test_fixtures_round_trip(fig2_root, fig2_lg, fig3a, fig3b):
    for g in (fig2_root, fig2_lg, fig3a, fig3b):
        assert from_dict(to_dict(g)) == g


def test_fixture_shapes(fig2_root, fig2_lg, fig3a, fig3b):
    assert (fig2_root.n, fig2_root.m) == (7, 9)
    assert (fig2_lg.n, fig2_lg.m) == (9, 19)
    assert fig3a.is_undirected and (fig3a.n, fig3a.m) == (7, 9)
    assert (fig3b.n, fig3b.m) == (9, 19)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"vertices": "ab"}',
        '{"vertices": ["a"], "edges": [{"ends": ["a"]}]}',
        '{"vertices": ["a", "b"], "edges": [{"ends": ["a", "b"], "kind": "arc"}]}',
        '{"vertices": ["a", "b"], "edges": [{"ends": ["a", "b"], "kind": "loopy"}]}',
    ],
)
def test_malformed(text):
    with pytest.raises(GraphFormatError):
        loads(text)


def test_schema():
    g = MixedGraph.build("uv", [("v", "u", ARC)])
    assert json.loads(dumps(g)) == {
        "vertices": ["u", "v"],
        "edges": [{"id": "u-v", "ends": ["u", "v"], "kind": "arc", "tail": "v", "head": "u"}],
    }


def test_dot():
    g = MixedGraph.build("uvw", [("v", "u", ARC), ("v", "w")])
    dot = to_dot(g, "ex")
    assert dot.startswith('digraph "ex" {')
    assert '"v" -> "u" [label="u-v"];' in dot
    assert '"v" -> "w" [dir=none, label="v-w"];' in dot
    assert dot.rstrip().endswith("}")

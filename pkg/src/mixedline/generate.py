"""Seeded random mixed graphs.

Generation uses :class:`random.Random` seeded with the string
``"{kind}:{n}:{seed}"``, so a given ``(kind, n, seed)`` always gives the same
graph on any platform.
"""

from __future__ import annotations

import random

from .core import ARC, DIGON, MixedGraph

KINDS = ("tree", "bipartite", "connected", "cycle")


def _orient(rng: random.Random, pairs, n: int) -> MixedGraph:
    edges = []
    for u, v in pairs:
        r = rng.randrange(3)
        if r == 0:
            edges.append((str(u), str(v), DIGON))
        elif r == 1:
            edges.append((str(u), str(v), ARC))
        else:
            edges.append((str(v), str(u), ARC))
    return MixedGraph.build([str(i) for i in range(n)], edges)


def random_orientation(g: MixedGraph, seed: int | str = 0) -> MixedGraph:
    """Uniformly random orientation of each edge of ``g``, keeping ids."""
    rng = random.Random(f"orient:{seed}")
    edges = []
    for e in g.edges:
        a, b = e.ends
        r = rng.randrange(3)
        if r == 0:
            edges.append((a, b, DIGON, e.id))
        elif r == 1:
            edges.append((a, b, ARC, e.id))
        else:
            edges.append((b, a, ARC, e.id))
    return MixedGraph.build(g.vertices, edges)


def gen_random(kind: str, n: int, seed: int = 0, extra: float = 0.3) -> MixedGraph:
    """Random mixed graph on vertices ``"0" .. str(n-1)``.

    ``extra`` is the probability of adding each possible non-tree edge for
    the ``connected`` and ``bipartite`` kinds.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    rng = random.Random(f"{kind}:{n}:{seed}")
    pairs: list[tuple[int, int]] = []
    if kind == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        pairs = [(i, (i + 1) % n) for i in range(n)]
    elif kind == "tree" or kind == "connected":
        pairs = [(rng.randrange(i), i) for i in range(1, n)]
        if kind == "connected":
            have = {frozenset(p) for p in pairs}
            for i in range(n):
                for j in range(i + 1, n):
                    if frozenset((i, j)) not in have and rng.random() < extra:
                        pairs.append((i, j))
    else:
        color = [0] + [1] + [rng.randrange(2) for _ in range(n - 2)]
        color = color[:n]
        for i in range(1, n):
            opposite = [k for k in range(i) if color[k] != color[i]]
            pairs.append((rng.choice(opposite), i))
        have = {frozenset(p) for p in pairs}
        for i in range(n):
            for j in range(i + 1, n):
                if color[i] != color[j] and frozenset((i, j)) not in have and rng.random() < extra:
                    pairs.append((i, j))
    return _orient(rng, pairs, n)

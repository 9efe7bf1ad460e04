from __future__ import annotations

import pytest

from mixedline.core import ARC, DIGON, MixedGraph
from mixedline.samples import load_fixture

# acceptance results, filled by test_acceptance and echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def path3(k1: str = DIGON, k2: str = DIGON) -> MixedGraph:
    """u - v - w with the given kinds; arcs run along the path."""
    return MixedGraph.build("uvw", [("u", "v", k1), ("v", "w", k2)])


def cycle(kinds: list[str]) -> MixedGraph:
    n = len(kinds)
    return MixedGraph.build([str(i) for i in range(n)], [(str(i), str((i + 1) % n), k) for i, k in enumerate(kinds)])


@pytest.fixture(scope="session")
def fig2_root():
    return load_fixture("fig2_root")


@pytest.fixture(scope="session")
def fig2_lg():
    return load_fixture("fig2_lg")


@pytest.fixture(scope="session")
def fig3a():
    return load_fixture("fig3a")


@pytest.fixture(scope="session")
def fig3b():
    return load_fixture("fig3b")


__all__ = ["ARC", "DIGON", "path3", "cycle"]

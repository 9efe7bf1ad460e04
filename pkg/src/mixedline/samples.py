"""Sample graphs shipped as JSON fixtures.

``fig2_root`` maps to ``fig2_lg`` under the gamma line graph; ``fig3b`` is an
orientation of ``L(fig3a)`` that is not a gamma line graph.
"""

from __future__ import annotations

from pathlib import Path

from .core import MixedGraph
from .serialize import load

FIXTURE_DIR = Path(__file__).parent / "fixtures"
NAMES = ("fig2_root", "fig2_lg", "fig3a", "fig3b")


def fixture_path(name: str) -> Path:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    return FIXTURE_DIR / f"{name}.json"


def load_fixture(name: str) -> MixedGraph:
    return load(fixture_path(name))

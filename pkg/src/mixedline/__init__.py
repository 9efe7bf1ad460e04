"""Exact algebra of mixed graphs over the Eisenstein integers.

Hermitian adjacency and incidence matrices with sixth-root-of-unity weights,
oriented line graphs, root recovery and monograph / switching theory, all
computed without floating point.
"""

from __future__ import annotations

from .core import (
    ARC,
    DIGON,
    GAMMA,
    GAMMA2,
    ONE,
    UNITS,
    Edge,
    EisensteinScalar,
    InvalidGraphError,
    MixedGraph,
    NotMonographError,
    PreconditionError,
    SizeBoundError,
    UnitDiagonal,
    UnitRoot,
    Variant,
    Walk,
    ensure_valid,
    underlying_graph,
    validate,
)
from .samples import load_fixture
from .generate import gen_random, random_orientation
from .linegraph import gamma_line_graph, undirected_line_graph
from .matrices import (
    CharPoly,
    ExactMatrix,
    char_poly,
    check_factorizations,
    check_line_charpoly,
    gamma_incidence,
    hermitian_adjacency,
)
from .monograph import (
    check_clique_cycle_condition,
    compute_store,
    edge_orientation_matrix,
    general_root_recovery,
    is_monograph,
    orientation_matrix,
    switch_with_diagonal,
    tree_root_recovery,
)
from .oracle import oracle_roots
from .roots import (
    CliqueSystem,
    construct_root_candidate,
    find_clique_systems,
    mixed_roots,
    relate_roots,
    root_from_clique_system,
)
from .serialize import dumps, load, loads, to_dot

__version__ = "0.1.0"

__all__ = [
    "ARC",
    "DIGON",
    "GAMMA",
    "GAMMA2",
    "ONE",
    "UNITS",
    "Edge",
    "EisensteinScalar",
    "InvalidGraphError",
    "MixedGraph",
    "NotMonographError",
    "PreconditionError",
    "SizeBoundError",
    "UnitDiagonal",
    "UnitRoot",
    "Variant",
    "Walk",
    "ensure_valid",
    "underlying_graph",
    "validate",
    "CharPoly",
    "ExactMatrix",
    "char_poly",
    "check_factorizations",
    "check_line_charpoly",
    "gamma_incidence",
    "hermitian_adjacency",
    "check_clique_cycle_condition",
    "compute_store",
    "edge_orientation_matrix",
    "general_root_recovery",
    "is_monograph",
    "orientation_matrix",
    "switch_with_diagonal",
    "tree_root_recovery",
    "CliqueSystem",
    "construct_root_candidate",
    "find_clique_systems",
    "mixed_roots",
    "relate_roots",
    "root_from_clique_system",
    "load_fixture",
    "gen_random",
    "random_orientation",
    "gamma_line_graph",
    "undirected_line_graph",
    "oracle_roots",
    "dumps",
    "load",
    "loads",
    "to_dot",
]

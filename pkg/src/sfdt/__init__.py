"""Strictly f-degenerate transversals of valued covers: exact solving,
constructibility recognition, coloring reductions, and property sweeps."""

from .cover import (
    Cover,
    CoverSubgraph,
    Transversal,
    ValueMap,
    circular_ladder_cover,
    cover_from_json,
    cover_to_json,
    id_cover,
    induced_cover,
    induced_on_transversal,
    kernel,
    make_cover,
    mobius_ladder_cover,
    tilde_complete_cover,
)
from .constructible import (
    BuildingKind,
    ConstructionTree,
    check_building,
    is_constructible,
    verify_building,
    verify_construction_tree,
)
from .degeneracy import (
    brute_force_strictly_f_degenerate,
    coloring_number,
    f_removing_order,
    is_strictly_f_degenerate,
    is_strictly_k_degenerate,
)
from .graph import Graph, blocks, is_2connected, is_connected, make_graph
from .solver import (
    SolveResult,
    deficiency,
    find_minimal_non_sfdt,
    find_sfdt,
    find_sfdt_bounded,
    find_sfdt_strictly_bounded,
)

__all__ = [
    "BuildingKind",
    "ConstructionTree",
    "Cover",
    "CoverSubgraph",
    "Graph",
    "SolveResult",
    "Transversal",
    "ValueMap",
    "blocks",
    "brute_force_strictly_f_degenerate",
    "check_building",
    "circular_ladder_cover",
    "coloring_number",
    "cover_from_json",
    "cover_to_json",
    "deficiency",
    "f_removing_order",
    "find_minimal_non_sfdt",
    "find_sfdt",
    "find_sfdt_bounded",
    "find_sfdt_strictly_bounded",
    "id_cover",
    "induced_cover",
    "induced_on_transversal",
    "is_2connected",
    "is_connected",
    "is_constructible",
    "is_strictly_f_degenerate",
    "is_strictly_k_degenerate",
    "kernel",
    "make_cover",
    "make_graph",
    "mobius_ladder_cover",
    "tilde_complete_cover",
    "verify_building",
    "verify_construction_tree",
]

"""Geodetic sets of graphs: verifiers, exact solvers, approximations, and
reduction gadgets."""

from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    GeodeticError,
    ParseError,
    StructuralError,
    UncoverableColorError,
    ValidationError,
)
from .exact import (
    Limits,
    SolveReport,
    default_limits,
    min_geodetic_decomposed,
    min_geodetic_set,
    min_property_set,
)
from .gadgets import (
    GadgetOutput,
    RotationSystem,
    apex_pair_gadget,
    normalize_line_geodetic,
    pendant_gadget,
    planar_gadget,
    universal_vertex_gadget,
)
from .graph import (
    UNREACHABLE,
    DistanceOracle,
    Graph,
    LineGraphMap,
    bfs_all_pairs,
    biconnected_decomposition,
    canonical_edge,
    edge_distance,
    interval,
    is_connected,
    is_geodetic_set,
    line_graph,
)
from .grid import (
    GridEmbedding,
    SolidGridReport,
    corner_paths,
    corner_vertices,
    corner_vertices_from_embedding,
    grid_3approx,
    validate_solid_grid,
)
from .mrsm import (
    ColoredMultigraph,
    approx_geodetic_via_mrsm,
    build_geodetic_mrsm,
    mrsm_dump,
    rainbow_exact,
    rainbow_greedy,
)
from .properties import PROPERTY_SELECTORS, check_property

__all__ = [
    "BudgetExceededError",
    "ColoredMultigraph",
    "DisconnectedGraphError",
    "DistanceOracle",
    "GadgetOutput",
    "GeodeticError",
    "Graph",
    "GridEmbedding",
    "Limits",
    "LineGraphMap",
    "ParseError",
    "PROPERTY_SELECTORS",
    "RotationSystem",
    "SolidGridReport",
    "SolveReport",
    "StructuralError",
    "UNREACHABLE",
    "UncoverableColorError",
    "ValidationError",
    "approx_geodetic_via_mrsm",
    "apex_pair_gadget",
    "bfs_all_pairs",
    "biconnected_decomposition",
    "build_geodetic_mrsm",
    "canonical_edge",
    "check_property",
    "corner_paths",
    "corner_vertices",
    "corner_vertices_from_embedding",
    "default_limits",
    "edge_distance",
    "grid_3approx",
    "interval",
    "is_connected",
    "is_geodetic_set",
    "line_graph",
    "min_geodetic_decomposed",
    "min_geodetic_set",
    "min_property_set",
    "mrsm_dump",
    "normalize_line_geodetic",
    "pendant_gadget",
    "planar_gadget",
    "rainbow_exact",
    "rainbow_greedy",
    "universal_vertex_gadget",
    "validate_solid_grid",
]

"""Spans of graphs: how far apart two players can stay while both cover a graph."""

from .graph import (
    UNREACHABLE,
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphError,
    ParseError,
    Partition,
    all_pairs_distances,
    connected_components,
    diameter,
    eccentricity,
    induced_subgraph,
    is_n_friendly,
    parse_edge_list,
    radius,
)
from .oracle import OracleLimitError, oracle_exists, oracle_span
from .products import ProductGraph, ProductKind, Side, build_product, project
from .rules import VARIANTS, Goal, MoveRules
from .solver import SpanResult, all_spans, exists_safe_walk, filtered_product, find_witness, projections_surjective, span
from .witness import (
    ValidationReport,
    WalkError,
    WalkPair,
    WitnessComponent,
    covering_walk,
    extract_walk_pair,
    validate_walk_pair,
)

__version__ = "0.1.0"

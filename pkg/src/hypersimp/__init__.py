"""Topological simplification of hypergraphs via 0-dimensional barcodes."""

from .errors import HypersimpError, ParameterError, ParseError, ValidationError
from .hypergraph import (
    Hypergraph,
    MergeRecord,
    collapse_edges,
    collapse_vertices,
    dual,
    hypergraph,
    validate,
)
from .graphs import (
    SingletonMode,
    WeightScheme,
    WeightedGraph,
    apply_singleton_mode,
    clique_expansion,
    line_graph,
    s_connected_components,
)
from .persistence import (
    Bar,
    Barcode,
    Dendrogram,
    EpsilonPartition,
    bottleneck_distance,
    compute_barcode,
    epsilon_partition,
    persistence_graph,
    simplified_barcode,
)
from .pipeline import (
    Correspondence,
    Side,
    SimplificationParams,
    SimplificationResult,
    class_members,
    expand_bar,
    simplify,
    unexpand_bar,
)
from .layout import HullPolygon, Layout, bipartite_layout, venn_hulls
from .metrics import (
    MetricsReport,
    contour_intersections,
    edge_crossings_metric,
    edge_length_variation,
    metrics_report,
    minimum_angle_metric,
)
from .formats import parse_hypergraph, parse_result, serialize_hypergraph, serialize_result

__version__ = "0.1.0"

__all__ = [
    "Bar",
    "Barcode",
    "Correspondence",
    "Dendrogram",
    "EpsilonPartition",
    "HullPolygon",
    "Hypergraph",
    "HypersimpError",
    "Layout",
    "MergeRecord",
    "MetricsReport",
    "ParameterError",
    "ParseError",
    "Side",
    "SimplificationParams",
    "SimplificationResult",
    "SingletonMode",
    "ValidationError",
    "WeightScheme",
    "WeightedGraph",
    "apply_singleton_mode",
    "bipartite_layout",
    "bottleneck_distance",
    "class_members",
    "clique_expansion",
    "collapse_edges",
    "collapse_vertices",
    "compute_barcode",
    "contour_intersections",
    "dual",
    "edge_crossings_metric",
    "edge_length_variation",
    "epsilon_partition",
    "expand_bar",
    "hypergraph",
    "line_graph",
    "metrics_report",
    "minimum_angle_metric",
    "parse_hypergraph",
    "parse_result",
    "persistence_graph",
    "s_connected_components",
    "serialize_hypergraph",
    "serialize_result",
    "simplified_barcode",
    "simplify",
    "unexpand_bar",
    "validate",
    "venn_hulls",
]

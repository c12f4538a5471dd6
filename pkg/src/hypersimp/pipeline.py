"""Barcode-guided hypergraph simplification.

Pipeline: optional exact collapse, graph representation per side (line graph
for hyperedge simplification, clique expansion for vertex simplification),
singleton handling, barcode, threshold partition with bar expansion, and the
induced simplified hypergraph with correspondence maps for linked views.

``prepare`` runs everything up to the barcode; ``finish`` applies a threshold
and expansion set. Threshold changes only rerun ``finish``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import ParameterError, ValidationError
from .hypergraph import (
    Hypergraph,
    MergeRecord,
    collapse_edges,
    collapse_vertices,
    edge_collapse_groups,
    validate,
    vertex_collapse_groups,
    super_label,
)
from .graphs import (
    SingletonMode,
    WeightScheme,
    WeightedGraph,
    apply_singleton_mode,
    clique_expansion,
    line_graph,
)
from .persistence import (
    Barcode,
    Dendrogram,
    EpsilonPartition,
    compute_barcode,
    epsilon_partition,
)


class Side(enum.Enum):
    VERTEX = "vertex"
    HYPEREDGE = "edge"


@dataclass(frozen=True)
class SimplificationParams:
    side: Side = Side.HYPEREDGE
    s: int = 1
    scheme: WeightScheme = WeightScheme.JACCARD
    epsilon: float | Fraction = 0
    pre_collapse_vertices: bool = False
    pre_collapse_edges: bool = False
    singleton_mode: SingletonMode = SingletonMode.GREY_OUT
    expanded_bars: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Correspondence:
    """Id maps linking every pipeline stage.

    - original vertex/edge id -> collapsed id (total maps);
    - ``filtered``: collapsed-side ids on the simplification side removed by
      singleton Filter (absent from classes and simplified outputs);
    - graph node id (collapsed-side id) -> partition class index; the class
      index doubles as the simplified id of the merged element. Ids on the
      other side pass through unchanged.
    """

    vertex_to_collapsed: tuple[int, ...]
    edge_to_collapsed: tuple[int, ...]
    filtered: tuple[int, ...]
    node_to_class: dict[int, int]


@dataclass(frozen=True)
class SimplificationResult:
    original: Hypergraph
    collapsed: Hypergraph
    vertex_merges: tuple[MergeRecord, ...]
    edge_merges: tuple[MergeRecord, ...]
    params: SimplificationParams
    graph: WeightedGraph
    barcode: Barcode
    dendrogram: Dendrogram
    partition: EpsilonPartition
    simplified_hypergraph: Hypergraph
    simplified_graph: WeightedGraph
    correspondence: Correspondence


@dataclass(frozen=True)
class PreparedSimplification:
    """Everything that depends on the non-threshold parameters only."""

    original: Hypergraph
    collapsed: Hypergraph
    vertex_merges: tuple[MergeRecord, ...]
    edge_merges: tuple[MergeRecord, ...]
    vertex_to_collapsed: tuple[int, ...]
    edge_to_collapsed: tuple[int, ...]
    graph: WeightedGraph
    filtered: tuple[int, ...]
    barcode: Barcode
    dendrogram: Dendrogram
    side: Side
    s: int
    scheme: WeightScheme
    pre_collapse_vertices: bool
    pre_collapse_edges: bool
    singleton_mode: SingletonMode


def prepare(h: Hypergraph, params: SimplificationParams) -> PreparedSimplification:
    """Collapse, build the graph representation, and compute its barcode."""
    violations = validate(h)
    if violations:
        raise ValidationError("; ".join(violations))
    if params.s < 1:
        raise ParameterError(f"s must be a positive integer, got {params.s}")
    if params.epsilon < 0:
        raise ParameterError(f"epsilon must be >= 0, got {params.epsilon}")

    collapsed = h
    vertex_merges: tuple[MergeRecord, ...] = ()
    v_map = tuple(range(h.vertex_count))
    if params.pre_collapse_vertices:
        groups = vertex_collapse_groups(h)
        collapsed, records = collapse_vertices(h)
        vertex_merges = tuple(records)
        lookup = {old: new for new, group in enumerate(groups) for old in group}
        v_map = tuple(lookup[i] for i in range(h.vertex_count))

    edge_merges: tuple[MergeRecord, ...] = ()
    e_map = tuple(range(collapsed.edge_count))
    if params.pre_collapse_edges:
        groups = edge_collapse_groups(collapsed)
        collapsed, records = collapse_edges(collapsed)
        edge_merges = tuple(records)
        lookup = {old: new for new, group in enumerate(groups) for old in group}
        e_map = tuple(lookup[i] for i in range(len(e_map)))

    if params.side is Side.HYPEREDGE:
        full = line_graph(collapsed, params.s, params.scheme)
    else:
        full = clique_expansion(collapsed, params.s, params.scheme)
    graph = apply_singleton_mode(full, params.singleton_mode)
    filtered = tuple(sorted(set(full.nodes) - set(graph.nodes)))
    barcode, dendrogram = compute_barcode(graph)
    return PreparedSimplification(
        original=h,
        collapsed=collapsed,
        vertex_merges=vertex_merges,
        edge_merges=edge_merges,
        vertex_to_collapsed=v_map,
        edge_to_collapsed=e_map,
        graph=graph,
        filtered=filtered,
        barcode=barcode,
        dendrogram=dendrogram,
        side=params.side,
        s=params.s,
        scheme=params.scheme,
        pre_collapse_vertices=params.pre_collapse_vertices,
        pre_collapse_edges=params.pre_collapse_edges,
        singleton_mode=params.singleton_mode,
    )


def _induce_hyperedge_side(
    collapsed: Hypergraph, classes: tuple[tuple[int, ...], ...]
) -> Hypergraph:
    """Each class of hyperedges becomes one super-edge (union of member sets)."""
    labels = []
    members = []
    for cls in classes:
        labels.append(super_label([collapsed.edge_labels[e] for e in cls]))
        merged: set[int] = set()
        for e in cls:
            merged |= collapsed.edge_members[e]
        members.append(frozenset(merged))
    return Hypergraph(collapsed.vertex_labels, tuple(labels), tuple(members))


def _induce_vertex_side(
    collapsed: Hypergraph,
    classes: tuple[tuple[int, ...], ...],
    filtered: tuple[int, ...],
) -> Hypergraph:
    """Each class of vertices becomes one super-vertex replacing its members."""
    to_class: dict[int, int] = {}
    labels = []
    for idx, cls in enumerate(classes):
        labels.append(super_label([collapsed.vertex_labels[v] for v in cls]))
        for v in cls:
            to_class[v] = idx
    dropped = set(filtered)
    members = tuple(
        frozenset(to_class[v] for v in e if v not in dropped)
        for e in collapsed.edge_members
    )
    return Hypergraph(tuple(labels), collapsed.edge_labels, members)


def finish(
    prep: PreparedSimplification,
    epsilon: float | Fraction,
    expanded_bars: frozenset[int] | set[int] = frozenset(),
) -> SimplificationResult:
    """Apply a threshold and expansion set to a prepared pipeline."""
    if epsilon < 0:
        raise ParameterError(f"epsilon must be >= 0, got {epsilon}")
    partition = epsilon_partition(prep.dendrogram, epsilon, expanded_bars)
    if prep.side is Side.HYPEREDGE:
        simplified = _induce_hyperedge_side(prep.collapsed, partition.classes)
        simplified_graph = line_graph(simplified, prep.s, prep.scheme)
    else:
        simplified = _induce_vertex_side(prep.collapsed, partition.classes, prep.filtered)
        simplified_graph = clique_expansion(simplified, prep.s, prep.scheme)
    node_to_class = {
        node: idx for idx, cls in enumerate(partition.classes) for node in cls
    }
    correspondence = Correspondence(
        vertex_to_collapsed=prep.vertex_to_collapsed,
        edge_to_collapsed=prep.edge_to_collapsed,
        filtered=prep.filtered,
        node_to_class=node_to_class,
    )
    params = SimplificationParams(
        side=prep.side,
        s=prep.s,
        scheme=prep.scheme,
        epsilon=epsilon,
        pre_collapse_vertices=prep.pre_collapse_vertices,
        pre_collapse_edges=prep.pre_collapse_edges,
        singleton_mode=prep.singleton_mode,
        expanded_bars=frozenset(expanded_bars),
    )
    return SimplificationResult(
        original=prep.original,
        collapsed=prep.collapsed,
        vertex_merges=prep.vertex_merges,
        edge_merges=prep.edge_merges,
        params=params,
        graph=prep.graph,
        barcode=prep.barcode,
        dendrogram=prep.dendrogram,
        partition=partition,
        simplified_hypergraph=simplified,
        simplified_graph=simplified_graph,
        correspondence=correspondence,
    )


def simplify(h: Hypergraph, params: SimplificationParams) -> SimplificationResult:
    """Run the full pipeline: collapse, graph, barcode, partition, induction."""
    return finish(prepare(h, params), params.epsilon, params.expanded_bars)


def _active_bar(r: SimplificationResult, bar_id: int):
    for bar in r.barcode.finite_bars:
        if bar.id == bar_id:
            return bar
    return None


def expand_bar(r: SimplificationResult, bar_id: int) -> SimplificationResult:
    """Undo the single merge represented by an active bar below the threshold."""
    bar = _active_bar(r, bar_id)
    if bar is None:
        raise ParameterError(f"no finite bar with id {bar_id}")
    if bar.length > r.params.epsilon:
        raise ParameterError(
            f"bar {bar_id} is above the current threshold and cannot be expanded"
        )
    if bar_id in r.params.expanded_bars:
        raise ParameterError(f"bar {bar_id} is already expanded")
    params = replace(r.params, expanded_bars=r.params.expanded_bars | {bar_id})
    return simplify(r.original, params)


def unexpand_bar(r: SimplificationResult, bar_id: int) -> SimplificationResult:
    """Re-apply a previously expanded merge."""
    if bar_id not in r.params.expanded_bars:
        raise ParameterError(f"bar {bar_id} is not expanded")
    params = replace(r.params, expanded_bars=r.params.expanded_bars - {bar_id})
    return simplify(r.original, params)


def class_members(r: SimplificationResult, simplified_id: int) -> list[int]:
    """Original ids merged into one simplified element, in declaration order.

    For vertex-side simplification the id names a super-vertex and the result
    lists original vertex ids; for hyperedge-side, a super-edge and original
    edge ids.
    """
    if not (0 <= simplified_id < len(r.partition.classes)):
        raise ParameterError(f"unknown simplified id {simplified_id}")
    cls = r.partition.classes[simplified_id]
    collapsed_ids = set(cls)
    if r.params.side is Side.VERTEX:
        forward = r.correspondence.vertex_to_collapsed
    else:
        forward = r.correspondence.edge_to_collapsed
    return [orig for orig, c in enumerate(forward) if c in collapsed_ids]

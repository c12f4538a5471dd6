"""Weighted s-line graphs, s-clique expansions, and s-connected components.

Edge weights are exact rationals (``fractions.Fraction``): Jaccard weights are
|A∩B|/|A∪B| in (0,1], overlap weights are the integer |A∩B|. An edge exists
only when the intersection has size >= s, so every stored weight is positive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .hypergraph import Hypergraph, dual


class WeightScheme(enum.Enum):
    JACCARD = "jaccard"
    OVERLAP = "overlap"


class SingletonMode(enum.Enum):
    GREY_OUT = "greyout"
    FILTER = "filter"


@dataclass(frozen=True)
class WeightedGraph:
    """A simple graph over hypergraph-side ids (edge ids or vertex ids).

    ``nodes`` keeps the originating ids (they stay stable when singletons are
    filtered out); ``edges`` are (u, v, weight) with u < v; ``singleton`` flags
    nodes with no incident edge under the current s.
    """

    nodes: tuple[int, ...]
    labels: tuple[str, ...]
    edges: tuple[tuple[int, int, Fraction], ...]
    singleton: tuple[bool, ...]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def weight(self, u: int, v: int) -> Fraction | None:
        """Weight of edge (u, v), or None if the pair is not adjacent."""
        if u > v:
            u, v = v, u
        for a, b, w in self.edges:
            if (a, b) == (u, v):
                return w
        return None


def _check_s(s: int) -> None:
    if s < 1:
        raise ParameterError(f"s must be a positive integer, got {s}")


def _pair_weight(a: frozenset[int], b: frozenset[int], scheme: WeightScheme) -> tuple[int, Fraction]:
    inter = len(a & b)
    if scheme is WeightScheme.OVERLAP:
        return inter, Fraction(inter)
    union = len(a | b)
    return inter, (Fraction(inter, union) if union else Fraction(0))


def _graph_from_sets(
    ids: list[int],
    labels: list[str],
    sets: list[frozenset[int]],
    s: int,
    scheme: WeightScheme,
) -> WeightedGraph:
    edges: list[tuple[int, int, Fraction]] = []
    degree = {i: 0 for i in ids}
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            inter, w = _pair_weight(sets[i], sets[j], scheme)
            if inter >= s:
                edges.append((ids[i], ids[j], w))
                degree[ids[i]] += 1
                degree[ids[j]] += 1
    return WeightedGraph(
        nodes=tuple(ids),
        labels=tuple(labels),
        edges=tuple(edges),
        singleton=tuple(degree[i] == 0 for i in ids),
    )


def line_graph(h: Hypergraph, s: int = 1, scheme: WeightScheme = WeightScheme.JACCARD) -> WeightedGraph:
    """One node per hyperedge; (e_i, e_j) adjacent iff |e_i ∩ e_j| >= s.

    Weights are computed on the member sets per the scheme. The s filter always
    uses the intersection size, even under Jaccard weights.
    """
    _check_s(s)
    ids = list(range(h.edge_count))
    return _graph_from_sets(ids, list(h.edge_labels), list(h.edge_members), s, scheme)


def clique_expansion(h: Hypergraph, s: int = 1, scheme: WeightScheme = WeightScheme.JACCARD) -> WeightedGraph:
    """One node per vertex; (v_i, v_j) adjacent iff they share >= s hyperedges.

    Equals line_graph(dual(h), s, scheme) node-for-node and weight-for-weight;
    this construction works directly on the vertex membership sets.
    """
    _check_s(s)
    ids = list(range(h.vertex_count))
    return _graph_from_sets(ids, list(h.vertex_labels), list(h.vertex_memberships), s, scheme)


def s_connected_components(h: Hypergraph, s: int = 1) -> list[list[int]]:
    """Partition of edge ids into s-connected components (classes sorted by min id)."""
    _check_s(s)
    g = line_graph(h, s, WeightScheme.OVERLAP)
    adjacency: dict[int, list[int]] = {n: [] for n in g.nodes}
    for u, v, _ in g.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in g.nodes:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            n = stack.pop()
            comp.append(n)
            for m in adjacency[n]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        components.append(sorted(comp))
    components.sort(key=lambda c: c[0])
    return components


def apply_singleton_mode(g: WeightedGraph, mode: SingletonMode) -> WeightedGraph:
    """GreyOut keeps the graph intact; Filter drops singleton-flagged nodes."""
    if mode is SingletonMode.GREY_OUT:
        return g
    keep = [i for i, flag in enumerate(g.singleton) if not flag]
    return WeightedGraph(
        nodes=tuple(g.nodes[i] for i in keep),
        labels=tuple(g.labels[i] for i in keep),
        edges=g.edges,
        singleton=tuple(False for _ in keep),
    )


__all__ = [
    "WeightScheme",
    "SingletonMode",
    "WeightedGraph",
    "line_graph",
    "clique_expansion",
    "s_connected_components",
    "apply_singleton_mode",
    "dual",
]

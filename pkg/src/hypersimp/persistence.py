"""0-dimensional persistence barcodes of similarity-weighted graphs.

Each edge weight w (a similarity) is inverted to a distance 1/w; the minimum
spanning forest of those distances yields the barcode: every MST edge becomes a
finite bar of length 1/w, plus one essential bar per connected component.
Cutting the induced dendrogram at a threshold reproduces single-linkage
clustering; removing individual merge edges realizes bar expansion.

All lengths are exact rationals, so thresholds compare without rounding error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParameterError
from .graphs import WeightedGraph


@dataclass(frozen=True)
class Bar:
    """One bar of a 0-dimensional barcode; born at 0, dies at ``length``.

    Essential bars (one per connected component) never die: their length and
    mst_edge are None.
    """

    id: int
    length: Fraction | None
    mst_edge: tuple[int, int] | None
    essential: bool = False


@dataclass(frozen=True)
class Barcode:
    bars: tuple[Bar, ...]
    node_count: int
    component_count: int

    @property
    def finite_bars(self) -> tuple[Bar, ...]:
        return tuple(b for b in self.bars if not b.essential)

    @property
    def essential_bars(self) -> tuple[Bar, ...]:
        return tuple(b for b in self.bars if b.essential)


@dataclass(frozen=True)
class DendrogramNode:
    """Internal merge node: the two child clusters joined by one finite bar."""

    bar_id: int
    height: Fraction
    edge: tuple[int, int]
    left: "DendrogramTree"
    right: "DendrogramTree"


DendrogramTree = Union[int, DendrogramNode]  # leaves are graph node ids


@dataclass(frozen=True)
class Dendrogram:
    """One binary merge tree per connected component; leaves are graph nodes."""

    leaves: tuple[int, ...]
    roots: tuple[DendrogramTree, ...]

    @property
    def node_count(self) -> int:
        return len(self.leaves)

    def merge_nodes(self) -> list[DendrogramNode]:
        """All internal nodes, in bar-id order."""
        found: list[DendrogramNode] = []
        stack: list[DendrogramTree] = list(self.roots)
        while stack:
            t = stack.pop()
            if isinstance(t, DendrogramNode):
                found.append(t)
                stack.append(t.left)
                stack.append(t.right)
        found.sort(key=lambda n: n.bar_id)
        return found


@dataclass(frozen=True)
class EpsilonPartition:
    epsilon: Fraction | float
    expanded_bars: frozenset[int]
    classes: tuple[tuple[int, ...], ...]


class _DisjointSet:
    def __init__(self, ids):
        self.parent = {i: i for i in ids}

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _min_leaf(t: DendrogramTree) -> int:
    while isinstance(t, DendrogramNode):
        t = t.left
    return t


def compute_barcode(g: WeightedGraph) -> tuple[Barcode, Dendrogram]:
    """Kruskal over inverted weights; deterministic tie-break (length, u, v).

    The left child of each merge node is the cluster containing the smaller
    endpoint of the merging edge, so output is reproducible bit-for-bit.
    """
    order = sorted(
        ((Fraction(1, 1) / w, min(u, v), max(u, v)) for u, v, w in g.edges)
    )
    ds = _DisjointSet(g.nodes)
    trees: dict[int, DendrogramTree] = {n: n for n in g.nodes}
    bars: list[Bar] = []
    for length, u, v in order:
        ru, rv = ds.find(u), ds.find(v)
        if ru == rv:
            continue
        bar_id = len(bars)
        bars.append(Bar(bar_id, length, (u, v)))
        node = DendrogramNode(bar_id, length, (u, v), trees[ru], trees[rv])
        ds.union(u, v)
        root = ds.find(u)
        trees.pop(ru), trees.pop(rv)
        trees[root] = node
    roots = sorted(trees.values(), key=_min_leaf)
    for root in roots:
        bars.append(Bar(len(bars), None, None, essential=True))
    barcode = Barcode(tuple(bars), node_count=g.node_count, component_count=len(roots))
    dendrogram = Dendrogram(leaves=g.nodes, roots=tuple(roots))
    return barcode, dendrogram


def epsilon_partition(
    d: Dendrogram,
    epsilon: Fraction | float,
    expanded: frozenset[int] | set[int] = frozenset(),
) -> EpsilonPartition:
    """Components of the graph on d's leaves with the active MST edges.

    An MST edge is active when its bar length is <= epsilon and its bar id is
    not expanded. With nothing expanded this is single-linkage clustering cut
    at epsilon.
    """
    merges = d.merge_nodes()
    known = {n.bar_id for n in merges}
    unknown = set(expanded) - known
    if unknown:
        raise ParameterError(f"unknown bar ids in expanded set: {sorted(unknown)}")
    ds = _DisjointSet(d.leaves)
    for n in merges:
        if n.height <= epsilon and n.bar_id not in expanded:
            ds.union(*n.edge)
    groups: dict[int, list[int]] = {}
    for leaf in d.leaves:
        groups.setdefault(ds.find(leaf), []).append(leaf)
    classes = sorted((tuple(sorted(c)) for c in groups.values()), key=lambda c: c[0])
    return EpsilonPartition(epsilon, frozenset(expanded), tuple(classes))


def persistence_graph(d: Dendrogram) -> list[tuple[Fraction, int]]:
    """Component count as a right-continuous step function of the threshold.

    Starts at (0, node_count); drops at each distinct finite bar length; ends
    at the number of connected components.
    """
    steps: list[tuple[Fraction, int]] = [(Fraction(0), d.node_count)]
    count = d.node_count
    heights = sorted(n.height for n in d.merge_nodes())
    i = 0
    while i < len(heights):
        j = i
        while j < len(heights) and heights[j] == heights[i]:
            j += 1
        count -= j - i
        steps.append((heights[i], count))
        i = j
    return steps


def simplified_barcode(b: Barcode, epsilon: Fraction | float) -> Barcode:
    """Drop finite bars with length <= epsilon; keep essential bars."""
    if epsilon < 0:
        raise ParameterError(f"epsilon must be >= 0, got {epsilon}")
    kept = [bar for bar in b.finite_bars if bar.length > epsilon]
    removed = len(b.finite_bars) - len(kept)
    bars = [Bar(i, bar.length, bar.mst_edge) for i, bar in enumerate(kept)]
    for _ in range(b.component_count):
        bars.append(Bar(len(bars), None, None, essential=True))
    return Barcode(tuple(bars), b.node_count - removed, b.component_count)


def _kuhn_matching(n_left: int, n_right: int, adj: list[list[int]]) -> int:
    """Maximum bipartite matching size via augmenting paths."""
    match_right = [-1] * n_right

    def try_augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or try_augment(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    size = 0
    for u in range(n_left):
        if try_augment(u, [False] * n_right):
            size += 1
    return size


def _feasible(a: list[Fraction], b: list[Fraction], cost: Fraction) -> bool:
    """Is there a partial matching of the 0-born bars with bottleneck <= cost?

    Standard augmented construction: each bar gets a diagonal partner on the
    opposite side; diagonal partners always match each other.
    """
    m, n = len(a), len(b)
    adj: list[list[int]] = [[] for _ in range(m + n)]
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if abs(ai - bj) <= cost:
                adj[i].append(j)
        if ai <= 2 * cost:
            adj[i].append(n + i)
    for j, bj in enumerate(b):
        if bj <= 2 * cost:
            adj[m + j].append(j)
        adj[m + j].extend(range(n, n + m))
    return _kuhn_matching(m + n, n + m, adj) == m + n


def bottleneck_distance(b1: Barcode, b2: Barcode) -> Fraction | float:
    """Exact bottleneck distance between two 0-born barcodes.

    Finite bars may match each other at cost |length difference| or the
    diagonal at cost length/2. Essential bars only match essential bars, so
    mismatched essential counts give +inf. Computed exactly by binary search
    over the finitely many candidate costs.
    """
    if len(b1.essential_bars) != len(b2.essential_bars):
        return float("inf")
    a = [bar.length for bar in b1.finite_bars]
    b = [bar.length for bar in b2.finite_bars]
    candidates = {Fraction(0)}
    candidates.update(x / 2 for x in a)
    candidates.update(x / 2 for x in b)
    candidates.update(abs(x - y) for x in a for y in b)
    ordered = sorted(candidates)
    lo, hi = 0, len(ordered) - 1
    # the largest candidate (match everything to the diagonal or anywhere) is
    # always feasible
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(a, b, ordered[mid]):
            hi = mid
        else:
            lo = mid + 1
    return ordered[lo]

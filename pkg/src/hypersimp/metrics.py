"""Aesthetic quality criteria for hypergraph drawings.

Four scores over one layout: approximate contour intersections between hull
boundaries (m_i), normalized edge-crossing count of the bipartite view (m_c),
normalized edge length variation (m_l), and minimum-angle deviation (m_a).
The last three are defined for any straight-line graph drawing; the
hypergraph wrappers apply them to the bipartite incidence drawing.

Crossing tests use exact rational orientation predicates (floats are dyadic
rationals, so converting through Fraction loses nothing); touching endpoints
and collinear overlaps never count as crossings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .hypergraph import Hypergraph
from .layout import HullPolygon, Layout

Point = tuple[float, float]
Segment = tuple[Point, Point]
GraphEdge = tuple[int, int]


@dataclass(frozen=True)
class MetricsReport:
    m_i: int
    m_c: float
    m_l: float
    m_a: float


# float determinant error bound for the adaptive orientation test (Shewchuk)
_ORIENT_ERRBOUND = 3.3306690738754716e-16


def _orient(a: Point, b: Point, c: Point) -> int:
    """Exact sign of the cross product (b-a) x (c-a).

    Fast float path when the determinant clearly dominates rounding error;
    exact rational arithmetic otherwise.
    """
    left = (b[0] - a[0]) * (c[1] - a[1])
    right = (c[0] - a[0]) * (b[1] - a[1])
    det = left - right
    bound = _ORIENT_ERRBOUND * (abs(left) + abs(right))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    v = (Fraction(b[0]) - Fraction(a[0])) * (Fraction(c[1]) - Fraction(a[1])) - (
        Fraction(c[0]) - Fraction(a[0])
    ) * (Fraction(b[1]) - Fraction(a[1]))
    return (v > 0) - (v < 0)


def proper_crossing(s1: Segment, s2: Segment) -> bool:
    """True iff the open segments cross at a single interior point."""
    p1, p2 = s1
    q1, q2 = s2
    o1 = _orient(p1, p2, q1)
    o2 = _orient(p1, p2, q2)
    o3 = _orient(q1, q2, p1)
    o4 = _orient(q1, q2, p2)
    return o1 * o2 < 0 and o3 * o4 < 0


# ---------------------------------------------------------------------------
# m_i: contour intersections between hull boundaries


def _ring_segments(poly: HullPolygon) -> list[Segment]:
    pts = poly.points
    return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]


def contour_intersections(hulls: list[HullPolygon]) -> int:
    """Count proper crossings between boundary segments of distinct hulls."""
    rings = [_ring_segments(p) for p in hulls]
    count = 0
    for i in range(len(rings)):
        for j in range(i + 1, len(rings)):
            for a in rings[i]:
                for b in rings[j]:
                    if proper_crossing(a, b):
                        count += 1
    return count


# ---------------------------------------------------------------------------
# generic straight-line graph drawing metrics


def count_crossings(edges: list[GraphEdge], pos: dict[int, Point]) -> int:
    """Proper crossings over all unordered edge pairs."""
    segments = [(pos[u], pos[v]) for u, v in edges]
    return sum(
        proper_crossing(segments[i], segments[j])
        for i in range(len(segments))
        for j in range(i + 1, len(segments))
    )


def graph_edge_crossings_metric(edges: list[GraphEdge], pos: dict[int, Point]) -> float:
    """m_c = 1 - c/c_max, or 1 when c_max = 0 (e.g. a star).

    c_max = |E|(|E|-1)/2 - (1/2) sum_v deg(v)(deg(v)-1), the number of edge
    pairs that do not share an endpoint; adjacent pairs cannot properly cross,
    so m_c always lands in [0, 1].
    """
    e = len(edges)
    degree: dict[int, int] = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    c_max = e * (e - 1) // 2 - sum(d * (d - 1) for d in degree.values()) // 2
    if c_max <= 0:
        return 1.0
    return 1.0 - count_crossings(edges, pos) / c_max


def graph_edge_length_variation(edges: list[GraphEdge], pos: dict[int, Point]) -> float:
    """m_l = sigma_l / sqrt(|E|-1) with the normalized standard deviation sigma_l."""
    if len(edges) < 2:
        return 0.0
    lengths = [math.dist(pos[u], pos[v]) for u, v in edges]
    mean = sum(lengths) / len(lengths)
    if mean == 0.0:
        return 0.0
    sigma = math.sqrt(
        sum((l - mean) ** 2 for l in lengths) / (len(lengths) * mean * mean)
    )
    return sigma / math.sqrt(len(lengths) - 1)


def graph_minimum_angle_metric(edges: list[GraphEdge], pos: dict[int, Point]) -> float:
    """m_a = 1 - mean deviation of each node's minimum angle from 360/deg.

    Nodes of degree < 2 have no angle between adjacent edges and are excluded
    from the average; with no eligible node the metric is 1.
    """
    neighbours: dict[int, list[int]] = {}
    for u, v in edges:
        neighbours.setdefault(u, []).append(v)
        neighbours.setdefault(v, []).append(u)
    deviations = []
    for node, around in sorted(neighbours.items()):
        if len(around) < 2:
            continue
        cx, cy = pos[node]
        angles = sorted(
            math.atan2(pos[o][1] - cy, pos[o][0] - cx) for o in around
        )
        gaps = [b - a for a, b in zip(angles, angles[1:])]
        gaps.append(2.0 * math.pi - (angles[-1] - angles[0]))
        theta_min = math.degrees(min(gaps))
        ideal = 360.0 / len(around)
        deviations.append(abs((ideal - theta_min) / ideal))
    if not deviations:
        return 1.0
    return 1.0 - sum(deviations) / len(deviations)


# ---------------------------------------------------------------------------
# bipartite incidence drawing of a hypergraph


def incidence_edges(h: Hypergraph) -> list[GraphEdge]:
    """Incidence graph edges; vertex i is node i, hyperedge e is node n+e."""
    n = h.vertex_count
    return [
        (v, n + eid)
        for eid, members in enumerate(h.edge_members)
        for v in sorted(members)
    ]


def incidence_positions(h: Hypergraph, layout: Layout) -> dict[int, Point]:
    n = h.vertex_count
    pos: dict[int, Point] = {i: p for i, p in enumerate(layout.vertex_pos)}
    pos.update({n + i: p for i, p in enumerate(layout.edge_pos)})
    return pos


def edge_crossings_metric(h: Hypergraph, layout: Layout) -> float:
    return graph_edge_crossings_metric(incidence_edges(h), incidence_positions(h, layout))


def edge_length_variation(h: Hypergraph, layout: Layout) -> float:
    return graph_edge_length_variation(incidence_edges(h), incidence_positions(h, layout))


def minimum_angle_metric(h: Hypergraph, layout: Layout) -> float:
    return graph_minimum_angle_metric(incidence_edges(h), incidence_positions(h, layout))


def metrics_report(
    h: Hypergraph, layout: Layout, hulls: list[HullPolygon]
) -> MetricsReport:
    return MetricsReport(
        m_i=contour_intersections(hulls),
        m_c=edge_crossings_metric(h, layout),
        m_l=edge_length_variation(h, layout),
        m_a=minimum_angle_metric(h, layout),
    )

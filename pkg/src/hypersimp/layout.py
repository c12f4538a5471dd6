"""Deterministic 2D layout of the bipartite incidence view and Venn hulls.

The spring embedder is a plain Fruchterman-Reingold pass over the incidence
graph (vertices plus one node per hyperedge, edges = incidences), seeded and
iteration-bounded so identical inputs give identical coordinates. Connected
components are laid out independently and packed left to right, which keeps
disjoint structures in disjoint bounding boxes.

Hull polygons are convex member hulls offset outward by a margin, with corners
rounded by piecewise-linear arcs (16 segments per semicircle); one- and
two-member hyperedges degenerate to polygonized discs and capsules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph

ARC_SEGMENTS_PER_SEMICIRCLE = 16
DEFAULT_ITERATIONS = 300
DEFAULT_SEED = 42
DEFAULT_HULL_MARGIN = 0.05


@dataclass(frozen=True)
class Layout:
    """Positions for every vertex and every hyperedge node, in canvas units."""

    vertex_pos: tuple[tuple[float, float], ...]
    edge_pos: tuple[tuple[float, float], ...]
    seed: int


@dataclass(frozen=True)
class HullPolygon:
    """Closed convex polyline (counterclockwise) enclosing one hyperedge."""

    edge_id: int
    points: tuple[tuple[float, float], ...]
    margin: float


def _incidence_components(h: Hypergraph) -> list[list[int]]:
    """Components of the incidence graph; node i<n is vertex i, else edge i-n."""
    n = h.vertex_count
    total = n + h.edge_count
    adj: list[list[int]] = [[] for _ in range(total)]
    for eid, members in enumerate(h.edge_members):
        for v in members:
            adj[v].append(n + eid)
            adj[n + eid].append(v)
    seen = [False] * total
    comps: list[list[int]] = []
    for start in range(total):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _spring_positions(
    count: int, edges: list[tuple[int, int]], rng: np.random.Generator, iterations: int
) -> np.ndarray:
    if count == 1:
        return np.zeros((1, 2))
    pos = rng.random((count, 2)) * 2.0 - 1.0
    k = math.sqrt(4.0 / count)  # ideal pair distance for a [-1,1]^2 canvas
    temperature = 0.2
    cooling = temperature / (iterations + 1)
    edge_idx = np.array(edges, dtype=int) if edges else np.zeros((0, 2), dtype=int)
    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=2)
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, 1e-9)
        # repulsion k^2/d between all pairs (self terms vanish since delta=0)
        force = (k * k / dist**2)[:, :, None] * delta
        disp = force.sum(axis=1)
        # attraction d^2/k along edges
        if len(edge_idx):
            ev = pos[edge_idx[:, 0]] - pos[edge_idx[:, 1]]
            ed = np.maximum(np.linalg.norm(ev, axis=1), 1e-9)
            pull = (ed / k)[:, None] * ev
            np.subtract.at(disp, edge_idx[:, 0], pull)
            np.add.at(disp, edge_idx[:, 1], pull)
        length = np.maximum(np.linalg.norm(disp, axis=1), 1e-9)
        pos = pos + disp / length[:, None] * np.minimum(length, temperature)[:, None]
        temperature -= cooling
    return pos


def bipartite_layout(
    h: Hypergraph,
    seed: int = DEFAULT_SEED,
    iterations: int = DEFAULT_ITERATIONS,
) -> Layout:
    """Force-directed layout of the bipartite incidence graph, per component."""
    n = h.vertex_count
    total = n + h.edge_count
    coords = np.zeros((total, 2))
    cursor = 0.0
    for comp_index, comp in enumerate(_incidence_components(h)):
        local = {node: i for i, node in enumerate(comp)}
        edges = []
        for eid, members in enumerate(h.edge_members):
            if n + eid in local:
                edges.extend((local[v], local[n + eid]) for v in sorted(members))
        rng = np.random.default_rng(seed + comp_index * 7919)
        pos = _spring_positions(len(comp), edges, rng, iterations)
        # pack components left to right with a fixed gap
        pos = pos - pos.min(axis=0)
        for node, i in local.items():
            coords[node] = (pos[i, 0] + cursor, pos[i, 1])
        cursor += pos[:, 0].max() + 1.0 if len(comp) > 1 else 1.0
    return Layout(
        vertex_pos=tuple((float(x), float(y)) for x, y in coords[:n]),
        edge_pos=tuple((float(x), float(y)) for x, y in coords[n:]),
        seed=seed,
    )


def _convex_hull(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Andrew's monotone chain; returns counterclockwise hull without repeats."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _arc(
    center: tuple[float, float], radius: float, start: float, end: float
) -> list[tuple[float, float]]:
    """Points along a counterclockwise arc, endpoints included."""
    if end < start:
        end += 2.0 * math.pi
    span = end - start
    steps = max(1, math.ceil(ARC_SEGMENTS_PER_SEMICIRCLE * span / math.pi))
    return [
        (
            center[0] + radius * math.cos(start + span * t / steps),
            center[1] + radius * math.sin(start + span * t / steps),
        )
        for t in range(steps + 1)
    ]


def _disc(center: tuple[float, float], radius: float) -> list[tuple[float, float]]:
    pts = _arc(center, radius, 0.0, 2.0 * math.pi)
    return pts[:-1]


def _capsule(
    a: tuple[float, float], b: tuple[float, float], radius: float
) -> list[tuple[float, float]]:
    angle = math.atan2(b[1] - a[1], b[0] - a[0])
    out: list[tuple[float, float]] = []
    out.extend(_arc(b, radius, angle - math.pi / 2, angle + math.pi / 2))
    out.extend(_arc(a, radius, angle + math.pi / 2, angle + 3 * math.pi / 2))
    return out


def _offset_hull(
    hull: list[tuple[float, float]], radius: float
) -> list[tuple[float, float]]:
    """Dilate a CCW convex polygon by radius, rounding corners with arcs."""
    if radius <= 0.0:
        return list(hull)
    m = len(hull)
    out: list[tuple[float, float]] = []
    for i in range(m):
        prev = hull[(i - 1) % m]
        cur = hull[i]
        nxt = hull[(i + 1) % m]
        ang_in = math.atan2(cur[1] - prev[1], cur[0] - prev[0]) - math.pi / 2
        ang_out = math.atan2(nxt[1] - cur[1], nxt[0] - cur[0]) - math.pi / 2
        out.extend(_arc(cur, radius, ang_in, ang_out))
    return out


def venn_hulls(
    h: Hypergraph, layout: Layout, margin: float = DEFAULT_HULL_MARGIN
) -> list[HullPolygon]:
    """Convex hull of each hyperedge's member positions, grown by ``margin``.

    One-member edges become polygonized discs, two-member or collinear edges
    become capsules. Empty hyperedges produce no polygon.
    """
    polygons: list[HullPolygon] = []
    for eid, members in enumerate(h.edge_members):
        pts = [layout.vertex_pos[v] for v in sorted(members)]
        if not pts:
            continue
        hull = _convex_hull(pts)
        if len(hull) == 1:
            ring = _disc(hull[0], margin) if margin > 0 else [hull[0]] * 3
        elif len(hull) == 2:
            ring = _capsule(hull[0], hull[1], margin) if margin > 0 else [
                hull[0],
                hull[1],
                hull[0],
            ]
        else:
            ring = _offset_hull(hull, margin)
        polygons.append(HullPolygon(eid, tuple(ring), margin))
    return polygons

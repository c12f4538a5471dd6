"""Minimal SVG rendering of the hybrid view (Venn hulls + bipartite edges)."""

from __future__ import annotations

from .hypergraph import Hypergraph
from .layout import HullPolygon, Layout

PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#17becf", "#bcbd22", "#8c564b",
)
CANVAS = 800.0
PAD = 40.0


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def render_svg(h: Hypergraph, layout: Layout, hulls: list[HullPolygon]) -> bytes:
    """Fixed-style hybrid drawing; deterministic byte output for fixed inputs."""
    pts = list(layout.vertex_pos) + list(layout.edge_pos)
    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        x0, y0 = min(xs), min(ys)
        span = max(max(xs) - x0, max(ys) - y0, 1e-9)
    else:
        x0 = y0 = 0.0
        span = 1.0
    scale = (CANVAS - 2 * PAD) / span

    def sx(x: float) -> str:
        return _fmt(PAD + (x - x0) * scale)

    def sy(y: float) -> str:
        return _fmt(PAD + (y - y0) * scale)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS:.0f}" '
        f'height="{CANVAS:.0f}" viewBox="0 0 {CANVAS:.0f} {CANVAS:.0f}">'
    ]
    for hull in hulls:
        color = PALETTE[hull.edge_id % len(PALETTE)]
        path = " ".join(f"{sx(x)},{sy(y)}" for x, y in hull.points)
        out.append(
            f'<polygon points="{path}" fill="{color}" fill-opacity="0.15" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
    for eid, members in enumerate(h.edge_members):
        ex, ey = layout.edge_pos[eid]
        for v in sorted(members):
            vx, vy = layout.vertex_pos[v]
            out.append(
                f'<line x1="{sx(vx)}" y1="{sy(vy)}" x2="{sx(ex)}" y2="{sy(ey)}" '
                f'stroke="#999999" stroke-width="0.8"/>'
            )
    for eid in range(h.edge_count):
        ex, ey = layout.edge_pos[eid]
        color = PALETTE[eid % len(PALETTE)]
        out.append(f'<circle cx="{sx(ex)}" cy="{sy(ey)}" r="6" fill="{color}"/>')
        out.append(
            f'<text x="{sx(ex)}" y="{sy(ey)}" dx="8" dy="-8" font-size="11" '
            f'fill="{color}">{_escape(h.edge_labels[eid])}</text>'
        )
    for vid in range(h.vertex_count):
        vx, vy = layout.vertex_pos[vid]
        out.append(f'<circle cx="{sx(vx)}" cy="{sy(vy)}" r="4" fill="#111111"/>')
        out.append(
            f'<text x="{sx(vx)}" y="{sy(vy)}" dx="6" dy="12" font-size="10" '
            f'fill="#333333">{_escape(h.vertex_labels[vid])}</text>'
        )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )

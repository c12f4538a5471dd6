// Graph visualization panels: hypergraph encodings (venn, bipartite, hybrid,
// rainbow) and weighted-graph views, with linked hover highlighting.

import { clear, makeProjector, svgEl } from "./dom.js";
import { edgeColor, rainbowGrid, type Hover } from "./state.js";
import type { GraphDoc, HypergraphDoc, LayoutDoc } from "./types.js";
import type { Encoding } from "./state.js";

export interface HypergraphRenderOptions {
  encoding: Encoding;
  width: number;
  height: number;
  /** Highlighted element ids (hypergraph-side). */
  highlightVertices: ReadonlySet<number>;
  highlightEdges: ReadonlySet<number>;
  /** "vertex" | "edge" when elements of that kind are simplification classes. */
  classRole: "vertex" | "edge" | null;
  onHoverVertex?: (id: number | null) => void;
  onHoverEdge?: (id: number | null) => void;
}

export function renderHypergraph(
  svg: SVGSVGElement,
  doc: HypergraphDoc,
  layout: LayoutDoc,
  options: HypergraphRenderOptions,
): void {
  clear(svg);
  svg.setAttribute("width", String(options.width));
  svg.setAttribute("height", String(options.height));
  if (options.encoding === "rainbow") {
    renderRainbow(svg, doc, options);
    return;
  }
  const all = [...layout.vertices, ...layout.hyperedges];
  const project = makeProjector(all, options.width, options.height);
  const showHulls = options.encoding === "venn" || options.encoding === "hybrid";
  const showBipartite =
    options.encoding === "bipartite" || options.encoding === "hybrid";

  if (showHulls && layout.hulls) {
    for (const hull of layout.hulls) {
      const color = edgeColor(hull.edge_id);
      const pts = hull.points.map((p) => project(p).join(",")).join(" ");
      const poly = svgEl("polygon", {
        points: pts,
        fill: color,
        "fill-opacity": options.highlightEdges.has(hull.edge_id) ? 0.4 : 0.15,
        stroke: color,
        "stroke-width": options.highlightEdges.has(hull.edge_id) ? 2.5 : 1.2,
        "data-role": "hull",
        "data-edge-id": hull.edge_id,
      });
      attachHover(poly, () => options.onHoverEdge?.(hull.edge_id), () =>
        options.onHoverEdge?.(null),
      );
      svg.appendChild(poly);
    }
  }
  if (showBipartite) {
    for (const e of doc.hyperedges) {
      const [ex, ey] = project(layout.hyperedges[e.id]);
      for (const v of e.members) {
        const [vx, vy] = project(layout.vertices[v]);
        svg.appendChild(
          svgEl("line", {
            x1: vx, y1: vy, x2: ex, y2: ey,
            stroke: "#aaaaaa",
            "stroke-width": 0.8,
            "data-role": "incidence",
          }),
        );
      }
    }
  }
  for (const e of doc.hyperedges) {
    if (options.encoding === "venn") break;
    const [x, y] = project(layout.hyperedges[e.id]);
    const attrs: Record<string, string | number> = {
      cx: x, cy: y, r: options.highlightEdges.has(e.id) ? 8 : 6,
      fill: edgeColor(e.id),
      stroke: options.highlightEdges.has(e.id) ? "#000" : "none",
      "stroke-width": 2,
      "data-role": "edge-node",
      "data-edge-id": e.id,
    };
    if (options.classRole === "edge") {
      attrs["data-role"] = "simplified-class";
      attrs["data-class-id"] = e.id;
    }
    const node = svgEl("circle", attrs);
    attachHover(node, () => options.onHoverEdge?.(e.id), () =>
      options.onHoverEdge?.(null),
    );
    node.appendChild(svgTitle(e.label));
    svg.appendChild(node);
  }
  for (const v of doc.vertices) {
    const [x, y] = project(layout.vertices[v.id]);
    const attrs: Record<string, string | number> = {
      cx: x, cy: y, r: options.highlightVertices.has(v.id) ? 6 : 4,
      fill: options.highlightVertices.has(v.id) ? "#d62728" : "#111111",
      "data-role": "vertex-node",
      "data-vertex-id": v.id,
    };
    if (options.classRole === "vertex") {
      attrs["data-role"] = "simplified-class";
      attrs["data-class-id"] = v.id;
    }
    const node = svgEl("circle", attrs);
    attachHover(node, () => options.onHoverVertex?.(v.id), () =>
      options.onHoverVertex?.(null),
    );
    node.appendChild(svgTitle(v.label));
    svg.appendChild(node);
  }
}

function svgTitle(text: string): SVGTitleElement {
  const t = svgEl("title");
  t.textContent = text;
  return t;
}

function attachHover(
  node: Element,
  enter: () => void,
  leave: () => void,
): void {
  node.addEventListener("mouseover", enter);
  node.addEventListener("mouseout", leave);
}

function renderRainbow(
  svg: SVGSVGElement,
  doc: HypergraphDoc,
  options: HypergraphRenderOptions,
): void {
  const cell = 16;
  const labelWidth = 84;
  const grid = rainbowGrid(doc);
  svg.setAttribute(
    "height",
    String(Math.max(doc.vertices.length * cell + 30, 60)),
  );
  doc.hyperedges.forEach((e, col) => {
    const x = labelWidth + col * cell;
    const head = svgEl("rect", {
      x, y: 2, width: cell - 2, height: 10,
      fill: edgeColor(e.id),
      "data-role": "rainbow-column",
      "data-edge-id": e.id,
    });
    attachHover(head, () => options.onHoverEdge?.(e.id), () =>
      options.onHoverEdge?.(null),
    );
    svg.appendChild(head);
  });
  doc.vertices.forEach((v, row) => {
    const y = 16 + row * cell;
    const label = svgEl("text", {
      x: 2, y: y + 11, "font-size": 10,
      fill: options.highlightVertices.has(v.id) ? "#d62728" : "#333",
      "data-role": "rainbow-row-label",
    });
    label.textContent = v.label;
    svg.appendChild(label);
    grid[row].forEach((member, col) => {
      const rect = svgEl("rect", {
        x: labelWidth + col * cell,
        y,
        width: cell - 2,
        height: cell - 2,
        fill: member ? edgeColor(doc.hyperedges[col].id) : "#f0f0f0",
        "fill-opacity": member ? 0.85 : 1,
        "data-role": "rainbow-cell",
        "data-vertex-id": v.id,
        "data-edge-id": doc.hyperedges[col].id,
        "data-member": member ? 1 : 0,
      });
      if (member) {
        attachHover(rect, () => options.onHoverVertex?.(v.id), () =>
          options.onHoverVertex?.(null),
        );
      }
      svg.appendChild(rect);
    });
  });
}

export interface GraphRenderOptions {
  width: number;
  height: number;
  highlight: ReadonlySet<number>;
  onHoverNode?: (id: number | null) => void;
}

/** Weighted-graph panel; node ids live in the graph's own id space. */
export function renderGraph(
  svg: SVGSVGElement,
  graph: GraphDoc,
  positions: ReadonlyMap<number, [number, number]>,
  options: GraphRenderOptions,
): void {
  clear(svg);
  svg.setAttribute("width", String(options.width));
  svg.setAttribute("height", String(options.height));
  const pts = graph.nodes
    .map((n) => positions.get(n))
    .filter((p): p is [number, number] => p !== undefined);
  const project = makeProjector(pts, options.width, options.height);
  const maxWeight = Math.max(...graph.edges.map((e) => e[2] as number), 1e-9);
  for (const edge of graph.edges) {
    const [u, v, w] = [edge[0], edge[1], edge[2] as number];
    const pu = positions.get(u);
    const pv = positions.get(v);
    if (!pu || !pv) continue;
    const [x1, y1] = project(pu);
    const [x2, y2] = project(pv);
    const line = svgEl("line", {
      x1, y1, x2, y2,
      stroke: "#5b7fa6",
      "stroke-width": 0.5 + 3.0 * (w / maxWeight),
      "data-role": "graph-edge",
      "data-weight": w,
    });
    line.appendChild(svgTitle(`w = ${w}`));
    svg.appendChild(line);
  }
  graph.nodes.forEach((n, idx) => {
    const p = positions.get(n);
    if (!p) return;
    const [x, y] = project(p);
    const singleton = graph.singleton[idx];
    const node = svgEl("circle", {
      cx: x, cy: y, r: options.highlight.has(n) ? 7 : 5,
      fill: singleton ? "#cccccc" : edgeColor(n),
      stroke: options.highlight.has(n) ? "#000" : "none",
      "stroke-width": 2,
      "data-role": "graph-node",
      "data-node-id": n,
      "data-singleton": singleton ? 1 : 0,
    });
    attachHover(node, () => options.onHoverNode?.(n), () =>
      options.onHoverNode?.(null),
    );
    node.appendChild(svgTitle(graph.labels[idx]));
    svg.appendChild(node);
  });
}

// Pure view-state helpers. The UI never computes simplification locally:
// every structure below is a server response or a projection of one.

import type {
  BarcodeDoc,
  BarDoc,
  CorrespondenceDoc,
  HypergraphDoc,
  PartitionDoc,
  SideName,
} from "./types.js";

export type Encoding = "venn" | "bipartite" | "hybrid" | "rainbow";

export interface Hover {
  kind: "original" | "collapsed" | "class";
  id: number;
}

/** Everything highlighted when hovering one element of the linked views. */
export interface HighlightSets {
  originalIds: Set<number>;
  collapsedIds: Set<number>;
  classId: number | null;
}

export function finiteBars(barcode: BarcodeDoc): BarDoc[] {
  return barcode.bars.filter((b) => !b.essential);
}

/** Bars currently merged away: below the threshold and not expanded. */
export function activeBars(
  barcode: BarcodeDoc,
  epsilon: number,
  expanded: ReadonlySet<number>,
): BarDoc[] {
  return finiteBars(barcode).filter(
    (b) => (b.length ?? Infinity) <= epsilon && !expanded.has(b.id),
  );
}

export function classCount(partition: PartitionDoc): number {
  return partition.classes.length;
}

function forwardMap(corr: CorrespondenceDoc, side: SideName): number[] {
  return side === "vertex" ? corr.vertex_to_collapsed : corr.edge_to_collapsed;
}

/**
 * The full equivalence chain of one hovered element across the linked views:
 * original ids, their collapsed graph nodes, and the partition class. Hovering
 * any member of the chain highlights exactly the same sets (bijectivity).
 */
export function highlightFor(
  corr: CorrespondenceDoc,
  partition: PartitionDoc,
  side: SideName,
  hover: Hover,
): HighlightSets {
  const forward = forwardMap(corr, side);
  let classId: number | null = null;
  if (hover.kind === "class") {
    classId = hover.id;
  } else {
    const collapsed =
      hover.kind === "original" ? forward[hover.id] : hover.id;
    const found = corr.node_to_class[String(collapsed)];
    classId = found === undefined ? null : found;
  }
  if (classId === null || !partition.classes[classId]) {
    // filtered element: highlight just itself through the collapse map
    const collapsed =
      hover.kind === "original" ? forward[hover.id] : hover.id;
    const originals = new Set<number>();
    forward.forEach((c, orig) => {
      if (c === collapsed) originals.add(orig);
    });
    return {
      originalIds: originals,
      collapsedIds: new Set([collapsed]),
      classId: null,
    };
  }
  const collapsedIds = new Set(partition.classes[classId]);
  const originalIds = new Set<number>();
  forward.forEach((c, orig) => {
    if (collapsedIds.has(c)) originalIds.add(orig);
  });
  return { originalIds, collapsedIds, classId };
}

/** Rainbow-box cells: rows are vertices, columns are hyperedges in file order. */
export function rainbowGrid(h: HypergraphDoc): boolean[][] {
  return h.vertices.map((v) =>
    h.hyperedges.map((e) => e.members.includes(v.id)),
  );
}

export interface BarcodeScale {
  maxEpsilon: number;
  toX(epsilon: number): number;
  fromX(x: number): number;
}

/** Linear epsilon-to-pixel scale padded past the longest finite bar. */
export function barcodeScale(
  barcode: BarcodeDoc,
  width: number,
  pad = 12,
): BarcodeScale {
  const lengths = finiteBars(barcode).map((b) => b.length ?? 0);
  const maxLen = lengths.length ? Math.max(...lengths) : 1;
  const maxEpsilon = maxLen * 1.1 || 1;
  const span = Math.max(width - 2 * pad, 1);
  return {
    maxEpsilon,
    toX: (epsilon) => pad + (Math.min(epsilon, maxEpsilon) / maxEpsilon) * span,
    fromX: (x) =>
      Math.min(Math.max(((x - pad) / span) * maxEpsilon, 0), maxEpsilon),
  };
}

/** Step-function points for the persistence graph, right-continuous. */
export function persistenceSteps(
  steps: [number, number][],
  maxEpsilon: number,
): { x0: number; x1: number; count: number }[] {
  const out: { x0: number; x1: number; count: number }[] = [];
  for (let i = 0; i < steps.length; i++) {
    const [eps, count] = steps[i];
    const next = i + 1 < steps.length ? steps[i + 1][0] : maxEpsilon;
    out.push({ x0: eps, x1: Math.max(next, eps), count });
  }
  return out;
}

/**
 * Positions for collapsed-graph nodes: centroid of the original elements that
 * collapse into each node, taken from the original layout.
 */
export function collapsedPositions(
  corr: CorrespondenceDoc,
  layout: { vertices: [number, number][]; hyperedges: [number, number][] },
  side: SideName,
): Map<number, [number, number]> {
  const forward = forwardMap(corr, side);
  const source = side === "vertex" ? layout.vertices : layout.hyperedges;
  const acc = new Map<number, { x: number; y: number; n: number }>();
  forward.forEach((c, orig) => {
    const p = source[orig];
    if (!p) return;
    const cur = acc.get(c) ?? { x: 0, y: 0, n: 0 };
    cur.x += p[0];
    cur.y += p[1];
    cur.n += 1;
    acc.set(c, cur);
  });
  return new Map(
    [...acc].map(([c, { x, y, n }]) => [c, [x / n, y / n] as [number, number]]),
  );
}

/** Positions for simplified-graph nodes from the simplified layout. */
export function classPositions(
  partition: PartitionDoc,
  layout: { vertices: [number, number][]; hyperedges: [number, number][] },
  side: SideName,
): Map<number, [number, number]> {
  const source = side === "vertex" ? layout.vertices : layout.hyperedges;
  return new Map(
    partition.classes.map((_, k) => [k, source[k]] as [number, [number, number]]),
  );
}

export const PALETTE = [
  "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
  "#a65628", "#f781bf", "#17becf", "#bcbd22", "#8c564b",
];

export function edgeColor(edgeId: number): string {
  return PALETTE[edgeId % PALETTE.length];
}

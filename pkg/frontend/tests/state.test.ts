import { describe, expect, it } from "vitest";

import {
  activeBars,
  barcodeScale,
  classCount,
  classPositions,
  collapsedPositions,
  highlightFor,
  persistenceSteps,
  rainbowGrid,
} from "../src/state.js";
import type {
  BarcodeDoc,
  CorrespondenceDoc,
  HypergraphDoc,
  PartitionDoc,
} from "../src/types.js";

const BARCODE: BarcodeDoc = {
  bars: [
    { id: 0, length: 1.5, length_exact: [3, 2], edge: [0, 1] },
    { id: 1, length: 4, length_exact: [4, 1], edge: [1, 2] },
    { id: 2, essential: true },
  ],
  node_count: 3,
  component_count: 1,
};

const PARTITION: PartitionDoc = {
  epsilon: { value: 1.5 },
  expanded_bars: [],
  classes: [[0, 1], [2]],
};

const CORRESPONDENCE: CorrespondenceDoc = {
  vertex_to_collapsed: [0, 1, 2, 3, 4],
  edge_to_collapsed: [0, 1, 2],
  filtered: [],
  node_to_class: { "0": 0, "1": 0, "2": 1 },
};

describe("activeBars", () => {
  it("selects bars at or below the threshold that are not expanded", () => {
    expect(activeBars(BARCODE, 1.5, new Set()).map((b) => b.id)).toEqual([0]);
    expect(activeBars(BARCODE, 1.5, new Set([0]))).toEqual([]);
    expect(activeBars(BARCODE, 5, new Set()).map((b) => b.id)).toEqual([0, 1]);
  });

  it("never selects essential bars", () => {
    expect(activeBars(BARCODE, 1e9, new Set()).map((b) => b.id)).toEqual([0, 1]);
  });
});

describe("classCount", () => {
  it("counts partition classes", () => {
    expect(classCount(PARTITION)).toBe(2);
  });
});

describe("highlightFor", () => {
  it("maps an original edge to its whole merge chain", () => {
    const sets = highlightFor(CORRESPONDENCE, PARTITION, "edge", {
      kind: "original",
      id: 0,
    });
    expect([...sets.originalIds].sort()).toEqual([0, 1]);
    expect([...sets.collapsedIds].sort()).toEqual([0, 1]);
    expect(sets.classId).toBe(0);
  });

  it("is bijective: hovering any chain member gives the same sets", () => {
    const fromOriginal = highlightFor(CORRESPONDENCE, PARTITION, "edge", {
      kind: "original",
      id: 1,
    });
    const fromCollapsed = highlightFor(CORRESPONDENCE, PARTITION, "edge", {
      kind: "collapsed",
      id: 0,
    });
    const fromClass = highlightFor(CORRESPONDENCE, PARTITION, "edge", {
      kind: "class",
      id: 0,
    });
    for (const sets of [fromCollapsed, fromClass]) {
      expect([...sets.originalIds].sort()).toEqual([...fromOriginal.originalIds].sort());
      expect(sets.classId).toBe(fromOriginal.classId);
    }
  });

  it("traces pre-collapse merges back to all originals", () => {
    const corr: CorrespondenceDoc = {
      vertex_to_collapsed: [0, 1, 1],
      edge_to_collapsed: [0],
      filtered: [],
      node_to_class: { "0": 0, "1": 1 },
    };
    const partition: PartitionDoc = {
      epsilon: { value: 0 },
      expanded_bars: [],
      classes: [[0], [1]],
    };
    const sets = highlightFor(corr, partition, "vertex", {
      kind: "original",
      id: 2,
    });
    expect([...sets.originalIds].sort()).toEqual([1, 2]);
    expect(sets.classId).toBe(1);
  });

  it("handles filtered elements without a class", () => {
    const corr: CorrespondenceDoc = {
      vertex_to_collapsed: [0, 1],
      edge_to_collapsed: [0],
      filtered: [1],
      node_to_class: { "0": 0 },
    };
    const partition: PartitionDoc = {
      epsilon: { value: 0 },
      expanded_bars: [],
      classes: [[0]],
    };
    const sets = highlightFor(corr, partition, "vertex", {
      kind: "original",
      id: 1,
    });
    expect(sets.classId).toBeNull();
    expect([...sets.originalIds]).toEqual([1]);
  });
});

describe("rainbowGrid", () => {
  it("builds rows per vertex and columns per hyperedge in file order", () => {
    const doc: HypergraphDoc = {
      vertices: [
        { id: 0, label: "a" },
        { id: 1, label: "b" },
      ],
      hyperedges: [
        { id: 0, label: "e1", members: [0] },
        { id: 1, label: "e2", members: [0, 1] },
      ],
    };
    expect(rainbowGrid(doc)).toEqual([
      [true, true],
      [false, true],
    ]);
  });
});

describe("barcodeScale", () => {
  it("is monotone and invertible over the padded range", () => {
    const scale = barcodeScale(BARCODE, 400);
    expect(scale.maxEpsilon).toBeCloseTo(4.4);
    expect(scale.toX(0)).toBeLessThan(scale.toX(2));
    expect(scale.fromX(scale.toX(1.5))).toBeCloseTo(1.5, 9);
  });

  it("clamps below zero and above the maximum", () => {
    const scale = barcodeScale(BARCODE, 400);
    expect(scale.fromX(-50)).toBe(0);
    expect(scale.fromX(5000)).toBe(scale.maxEpsilon);
  });
});

describe("persistenceSteps", () => {
  it("builds right-continuous segments ending at the padded maximum", () => {
    const segs = persistenceSteps(
      [
        [0, 3],
        [1, 2],
        [2, 1],
      ],
      5,
    );
    expect(segs).toEqual([
      { x0: 0, x1: 1, count: 3 },
      { x0: 1, x1: 2, count: 2 },
      { x0: 2, x1: 5, count: 1 },
    ]);
  });
});

describe("positions", () => {
  const layout = {
    vertices: [[0, 0], [2, 0], [4, 4]] as [number, number][],
    hyperedges: [[1, 1], [3, 3]] as [number, number][],
  };

  it("collapsedPositions averages constituent coordinates", () => {
    const corr: CorrespondenceDoc = {
      vertex_to_collapsed: [0, 0, 1],
      edge_to_collapsed: [0, 1],
      filtered: [],
      node_to_class: {},
    };
    const positions = collapsedPositions(corr, layout, "vertex");
    expect(positions.get(0)).toEqual([1, 0]);
    expect(positions.get(1)).toEqual([4, 4]);
  });

  it("classPositions reads the simplified layout by side", () => {
    const partition: PartitionDoc = {
      epsilon: { value: 0 },
      expanded_bars: [],
      classes: [[0], [1]],
    };
    expect(classPositions(partition, layout, "edge").get(1)).toEqual([3, 3]);
    expect(classPositions(partition, layout, "vertex").get(0)).toEqual([0, 0]);
  });
});

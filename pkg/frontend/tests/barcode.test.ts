// @vitest-environment jsdom
import { beforeEach, describe, expect, it, vi } from "vitest";

import { BarcodePanel } from "../src/barcode.js";
import type { BarcodeDoc } from "../src/types.js";

const BARCODE: BarcodeDoc = {
  bars: [
    { id: 0, length: 1.5, length_exact: [3, 2], edge: [0, 1] },
    { id: 1, length: 4, length_exact: [4, 1], edge: [1, 2] },
    { id: 2, essential: true },
  ],
  node_count: 3,
  component_count: 1,
};

function stubRect(svg: SVGSVGElement): void {
  svg.getBoundingClientRect = () =>
    ({ left: 0, top: 0, width: 420, height: 160, right: 420, bottom: 160, x: 0, y: 0,
       toJSON: () => ({}) } as DOMRect);
}

describe("BarcodePanel", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = "";
    root = document.createElement("div");
    document.body.appendChild(root);
  });

  it("renders one element per bar plus the threshold line", () => {
    const panel = new BarcodePanel(root, { onEpsilon: () => {}, onToggleBar: () => {} });
    panel.render(BARCODE, 0, new Set());
    expect(root.querySelectorAll('[data-role="bar"]').length).toBe(2);
    expect(root.querySelectorAll('[data-role="essential-bar"]').length).toBe(1);
    expect(root.querySelector('[data-role="epsilon-line"]')).not.toBeNull();
  });

  it("marks bars below the threshold as merged and expanded ones distinctly", () => {
    const panel = new BarcodePanel(root, { onEpsilon: () => {}, onToggleBar: () => {} });
    panel.render(BARCODE, 2, new Set([0]));
    const bars = [...root.querySelectorAll('[data-role="bar"]')];
    expect(bars[0].getAttribute("data-state")).toBe("expanded");
    expect(bars[1].getAttribute("data-state")).toBe("alive");
    panel.render(BARCODE, 2, new Set());
    expect(
      root.querySelector('[data-bar-id="0"]')!.getAttribute("data-state"),
    ).toBe("merged");
  });

  it("clicking a bar below the threshold fires onToggleBar", () => {
    const toggles: number[] = [];
    const panel = new BarcodePanel(root, {
      onEpsilon: () => {},
      onToggleBar: (id) => toggles.push(id),
    });
    panel.render(BARCODE, 2, new Set());
    const bar = root.querySelector('[data-bar-id="0"]') as SVGLineElement;
    bar.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    const above = root.querySelector('[data-bar-id="1"]') as SVGLineElement;
    above.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(toggles).toEqual([0]);
  });

  it("debounces drag updates at 60ms and commits the last value", () => {
    vi.useFakeTimers();
    const commits: number[] = [];
    const panel = new BarcodePanel(root, {
      onEpsilon: (eps) => commits.push(eps),
      onToggleBar: () => {},
    });
    panel.render(BARCODE, 0, new Set());
    const svg = root.querySelector("svg") as SVGSVGElement;
    stubRect(svg);
    svg.dispatchEvent(new MouseEvent("mousedown", { clientX: 100, bubbles: true }));
    window.dispatchEvent(new MouseEvent("mousemove", { clientX: 150 }));
    window.dispatchEvent(new MouseEvent("mousemove", { clientX: 210 }));
    expect(commits).toEqual([]);
    vi.advanceTimersByTime(70);
    expect(commits.length).toBe(1);
    window.dispatchEvent(new MouseEvent("mouseup", {}));
    expect(commits.length).toBe(1);
    vi.useRealTimers();
  });

  it("moves the epsilon line immediately while dragging", () => {
    const panel = new BarcodePanel(root, { onEpsilon: () => {}, onToggleBar: () => {} });
    panel.render(BARCODE, 0, new Set());
    const svg = root.querySelector("svg") as SVGSVGElement;
    stubRect(svg);
    const line = root.querySelector('[data-role="epsilon-line"]')!;
    const before = line.getAttribute("x1");
    svg.dispatchEvent(new MouseEvent("mousedown", { clientX: 300, bubbles: true }));
    expect(line.getAttribute("x1")).not.toBe(before);
    panel.flushDebounce();
  });
});

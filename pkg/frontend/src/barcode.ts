// Barcode panel: horizontal bars sorted by length, a draggable threshold
// line, and click-to-expand on bars below the threshold.

import { clear, svgEl } from "./dom.js";
import { barcodeScale, finiteBars, type BarcodeScale } from "./state.js";
import type { BarcodeDoc } from "./types.js";

export interface BarcodeCallbacks {
  /** Commit a new threshold (already debounced by the panel). */
  onEpsilon(epsilon: number): void;
  /** Toggle expansion of a bar that lies below the threshold. */
  onToggleBar(barId: number): void;
}

const WIDTH = 420;
const BAR_GAP = 8;
const TOP = 18;
const DEBOUNCE_MS = 60;

export class BarcodePanel {
  private svg: SVGSVGElement;
  private scale: BarcodeScale | null = null;
  private epsilon = 0;
  private dragging = false;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private pendingEpsilon: number | null = null;

  constructor(
    private root: HTMLElement,
    private callbacks: BarcodeCallbacks,
  ) {
    this.svg = svgEl("svg", {
      width: WIDTH,
      height: 160,
      "data-role": "barcode-panel",
    });
    root.appendChild(this.svg);
    this.svg.addEventListener("mousedown", (ev) => this.startDrag(ev));
    window.addEventListener("mousemove", (ev) => this.moveDrag(ev));
    window.addEventListener("mouseup", () => this.endDrag());
  }

  render(barcode: BarcodeDoc, epsilon: number, expanded: ReadonlySet<number>): void {
    this.epsilon = epsilon;
    const bars = finiteBars(barcode);
    const essentials = barcode.bars.length - bars.length;
    const height = TOP + (bars.length + essentials) * BAR_GAP + 24;
    this.svg.setAttribute("height", String(Math.max(height, 80)));
    this.scale = barcodeScale(barcode, WIDTH);
    clear(this.svg);

    const axisY = TOP + (bars.length + essentials) * BAR_GAP + 8;
    this.svg.appendChild(
      svgEl("line", {
        x1: this.scale.toX(0),
        y1: axisY,
        x2: this.scale.toX(this.scale.maxEpsilon),
        y2: axisY,
        stroke: "#888",
        "stroke-width": 1,
      }),
    );

    bars.forEach((bar, i) => {
      const y = TOP + i * BAR_GAP;
      const simplified = (bar.length ?? Infinity) <= epsilon;
      const isExpanded = expanded.has(bar.id);
      const line = svgEl("line", {
        x1: this.scale!.toX(0),
        y1: y,
        x2: this.scale!.toX(bar.length ?? 0),
        y2: y,
        stroke: isExpanded ? "#e41a1c" : simplified ? "#bbbbbb" : "#1f4e79",
        "stroke-width": 4,
        "data-role": "bar",
        "data-bar-id": bar.id,
        "data-state": isExpanded ? "expanded" : simplified ? "merged" : "alive",
      });
      line.addEventListener("click", () => {
        if ((bar.length ?? Infinity) <= this.epsilon) {
          this.callbacks.onToggleBar(bar.id);
        }
      });
      this.svg.appendChild(line);
    });
    for (let i = 0; i < essentials; i++) {
      const y = TOP + (bars.length + i) * BAR_GAP;
      this.svg.appendChild(
        svgEl("line", {
          x1: this.scale.toX(0),
          y1: y,
          x2: WIDTH - 4,
          y2: y,
          stroke: "#1f4e79",
          "stroke-width": 4,
          "stroke-dasharray": "6 3",
          "data-role": "essential-bar",
        }),
      );
    }

    const x = this.scale.toX(epsilon);
    const lineEl = svgEl("line", {
      x1: x,
      y1: 4,
      x2: x,
      y2: axisY,
      stroke: "#d62728",
      "stroke-width": 2,
      cursor: "ew-resize",
      "data-role": "epsilon-line",
    });
    this.svg.appendChild(lineEl);
    const label = svgEl("text", {
      x: Math.min(x + 4, WIDTH - 60),
      y: 12,
      "font-size": 11,
      fill: "#d62728",
      "data-role": "epsilon-label",
    });
    label.textContent = `eps = ${epsilon.toFixed(3)}`;
    this.svg.appendChild(label);
  }

  private epsilonFromEvent(ev: MouseEvent): number {
    if (!this.scale) return 0;
    const rect = this.svg.getBoundingClientRect();
    return this.scale.fromX(ev.clientX - rect.left);
  }

  private startDrag(ev: MouseEvent): void {
    if (!this.scale) return;
    this.dragging = true;
    this.previewEpsilon(this.epsilonFromEvent(ev));
  }

  private moveDrag(ev: MouseEvent): void {
    if (!this.dragging) return;
    this.previewEpsilon(this.epsilonFromEvent(ev));
  }

  private endDrag(): void {
    if (!this.dragging) return;
    this.dragging = false;
    this.flushDebounce();
  }

  /** Move the line immediately; commit the threshold after a short quiet gap. */
  private previewEpsilon(epsilon: number): void {
    this.pendingEpsilon = epsilon;
    const lineEl = this.svg.querySelector('[data-role="epsilon-line"]');
    const label = this.svg.querySelector('[data-role="epsilon-label"]');
    if (lineEl && this.scale) {
      const x = this.scale.toX(epsilon);
      lineEl.setAttribute("x1", String(x));
      lineEl.setAttribute("x2", String(x));
      if (label) label.textContent = `eps = ${epsilon.toFixed(3)}`;
    }
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => this.flushDebounce(), DEBOUNCE_MS);
  }

  flushDebounce(): void {
    if (this.debounceTimer !== null) {
      clearTimeout(this.debounceTimer);
      this.debounceTimer = null;
    }
    if (this.pendingEpsilon !== null) {
      const value = this.pendingEpsilon;
      this.pendingEpsilon = null;
      this.callbacks.onEpsilon(value);
    }
  }
}

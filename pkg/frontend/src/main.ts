// Application shell: wires the service client to the panels. All structural
// data comes from server responses; mutations run one at a time through a
// client-side queue.

import { ApiClient, ApiError } from "./api.js";
import { BarcodePanel } from "./barcode.js";
import { ControlPanel } from "./controls.js";
import { clear, el, svgEl } from "./dom.js";
import { renderPersistenceGraph } from "./persistence.js";
import {
  classPositions,
  collapsedPositions,
  highlightFor,
  type Encoding,
  type HighlightSets,
  type Hover,
} from "./state.js";
import { renderGraph, renderHypergraph } from "./views.js";
import type {
  BarcodeDoc,
  CorrespondenceDoc,
  GraphDoc,
  HypergraphDoc,
  LayoutDoc,
  PartitionDoc,
  SideName,
  UiParams,
} from "./types.js";

export const DEMO_DOC: HypergraphDoc = {
  vertices: [1, 2, 3, 4, 5].map((i) => ({ id: i, label: `v${i}` })),
  hyperedges: [
    { id: 1, label: "e1", members: [1, 2, 3] },
    { id: 2, label: "e2", members: [2, 3] },
    { id: 3, label: "e3", members: [3, 4, 5] },
  ],
};

const PANEL_W = 340;
const PANEL_H = 300;
const EMPTY_HIGHLIGHT: HighlightSets = {
  originalIds: new Set(),
  collapsedIds: new Set(),
  classId: null,
};

interface AppState {
  sessionId: string | null;
  side: SideName;
  encoding: Encoding;
  epsilon: number;
  expanded: Set<number>;
  original: HypergraphDoc | null;
  barcode: BarcodeDoc | null;
  persistence: [number, number][];
  partition: PartitionDoc | null;
  simplified: HypergraphDoc | null;
  correspondence: CorrespondenceDoc | null;
  graph: GraphDoc | null;
  simplifiedGraph: GraphDoc | null;
  layoutOriginal: LayoutDoc | null;
  layoutSimplified: LayoutDoc | null;
  hover: Hover | null;
  showPersistence: boolean;
}

export class App {
  readonly state: AppState = {
    sessionId: null,
    side: "edge",
    encoding: "hybrid",
    epsilon: 0,
    expanded: new Set(),
    original: null,
    barcode: null,
    persistence: [],
    partition: null,
    simplified: null,
    correspondence: null,
    graph: null,
    simplifiedGraph: null,
    layoutOriginal: null,
    layoutSimplified: null,
    hover: null,
    showPersistence: false,
  };

  private queue: Promise<void> = Promise.resolve();
  private hoverFetch: Promise<void> = Promise.resolve();
  private barcodePanel: BarcodePanel;
  private controlPanel: ControlPanel;
  private panels: {
    original: SVGSVGElement;
    graph: SVGSVGElement;
    simplifiedGraph: SVGSVGElement;
    simplified: SVGSVGElement;
    persistence: SVGSVGElement;
  };
  private memberList: HTMLUListElement;
  private banner: HTMLDivElement;

  constructor(private root: HTMLElement, private api: ApiClient) {
    this.banner = el("div", { "data-role": "banner", class: "banner" });
    root.appendChild(this.banner);

    const grid = el("div", { class: "grid" });
    root.appendChild(grid);

    const left = el("div", { class: "column" });
    grid.appendChild(left);
    left.appendChild(el("h3", {}, "Barcode"));
    this.barcodePanel = new BarcodePanel(left, {
      onEpsilon: (epsilon) => void this.setEpsilon(epsilon),
      onToggleBar: (barId) => void this.toggleBar(barId),
    });
    const lowerToggle = el(
      "button",
      { type: "button", "data-role": "toggle-lower" },
      "labels / persistence graph",
    );
    lowerToggle.addEventListener("click", () => {
      this.state.showPersistence = !this.state.showPersistence;
      this.renderLowerPanel();
    });
    left.appendChild(lowerToggle);
    this.memberList = el("ul", { "data-role": "member-labels" });
    left.appendChild(this.memberList);
    this.panels = {
      original: svgEl("svg", { "data-panel": "original" }),
      graph: svgEl("svg", { "data-panel": "graph" }),
      simplifiedGraph: svgEl("svg", { "data-panel": "simplified-graph" }),
      simplified: svgEl("svg", { "data-panel": "simplified" }),
      persistence: svgEl("svg", { "data-panel": "persistence" }),
    };
    left.appendChild(this.panels.persistence);

    const middle = el("div", { class: "column views" });
    grid.appendChild(middle);
    for (const [title, panel] of [
      ["Original hypergraph", this.panels.original],
      ["Graph representation", this.panels.graph],
      ["Simplified graph", this.panels.simplifiedGraph],
      ["Simplified hypergraph", this.panels.simplified],
    ] as const) {
      const box = el("div", { class: "panel" });
      box.appendChild(el("h3", {}, title));
      box.appendChild(panel);
      middle.appendChild(box);
    }

    const right = el("div", { class: "column" });
    grid.appendChild(right);
    right.appendChild(el("h3", {}, "Parameters"));
    this.controlPanel = new ControlPanel(right, {
      onComputeBarcode: (params) => void this.applyParams(params),
      onEncoding: (encoding) => {
        this.state.encoding = encoding;
        this.renderViews();
      },
    });
  }

  /** Serialize mutations; surface failures in the banner. */
  private enqueue(task: () => Promise<void>): Promise<void> {
    this.queue = this.queue.then(task).catch((err) => this.fail(err));
    return this.queue;
  }

  private fail(err: unknown): void {
    const message =
      err instanceof ApiError ? `${err.status}: ${err.message}` : String(err);
    this.banner.textContent = message;
    this.banner.classList.add("visible");
  }

  private clearBanner(): void {
    this.banner.textContent = "";
    this.banner.classList.remove("visible");
  }

  /** Wait until pending drag commits and queued mutations settle. */
  async flush(): Promise<void> {
    this.barcodePanel.flushDebounce();
    await this.queue;
    await this.hoverFetch;
  }

  loadDocument(doc: HypergraphDoc): Promise<void> {
    return this.enqueue(async () => {
      const params = this.controlPanel.params();
      this.state.sessionId = await this.api.createSession(doc);
      this.state.side = params.side;
      this.state.epsilon = 0;
      this.state.expanded = new Set();
      const paramsResp = await this.api.setParams(this.state.sessionId, params);
      this.state.barcode = paramsResp.barcode;
      this.state.persistence = paramsResp.persistence_graph;
      await this.refreshThreshold();
      this.state.layoutOriginal = (
        await this.api.getLayout(this.state.sessionId, "original")
      ).layout;
      await this.refreshSimplifiedLayout();
      this.clearBanner();
      this.renderAll();
    });
  }

  applyParams(params: UiParams): Promise<void> {
    return this.enqueue(async () => {
      if (!this.state.sessionId) return;
      this.state.side = params.side;
      const resp = await this.api.setParams(this.state.sessionId, params);
      this.state.barcode = resp.barcode;
      this.state.persistence = resp.persistence_graph;
      if (resp.cleared) this.state.expanded = new Set();
      await this.refreshThreshold();
      await this.refreshSimplifiedLayout();
      this.clearBanner();
      this.renderAll();
    });
  }

  setEpsilon(epsilon: number): Promise<void> {
    return this.enqueue(async () => {
      if (!this.state.sessionId) return;
      this.state.epsilon = epsilon;
      await this.refreshThreshold();
      await this.refreshSimplifiedLayout();
      this.clearBanner();
      this.renderAll();
    });
  }

  toggleBar(barId: number): Promise<void> {
    return this.enqueue(async () => {
      if (!this.state.sessionId) return;
      try {
        const resp = this.state.expanded.has(barId)
          ? await this.api.unexpandBar(this.state.sessionId, barId)
          : await this.api.expandBar(this.state.sessionId, barId);
        if (this.state.expanded.has(barId)) {
          this.state.expanded.delete(barId);
        } else {
          this.state.expanded.add(barId);
        }
        this.applyThresholdResponse(resp);
      } catch (err) {
        if (err instanceof ApiError && err.status === 409) {
          // stale bar: resync with the server instead of blocking
          this.fail(err);
          await this.refreshThreshold();
        } else {
          throw err;
        }
      }
      await this.refreshSnapshot();
      await this.refreshSimplifiedLayout();
      this.renderAll();
    });
  }

  private applyThresholdResponse(resp: {
    partition: PartitionDoc;
    simplified_hypergraph: HypergraphDoc;
    correspondence: CorrespondenceDoc;
  }): void {
    this.state.partition = resp.partition;
    this.state.simplified = resp.simplified_hypergraph;
    this.state.correspondence = resp.correspondence;
  }

  private async refreshThreshold(): Promise<void> {
    if (!this.state.sessionId) return;
    this.applyThresholdResponse(
      await this.api.setThreshold(this.state.sessionId, this.state.epsilon),
    );
    await this.refreshSnapshot();
  }

  private async refreshSnapshot(): Promise<void> {
    if (!this.state.sessionId) return;
    const snapshot = await this.api.getSnapshot(this.state.sessionId);
    // the server normalizes uploaded ids to dense 0-based; use its documents
    // so every panel indexes layouts consistently
    this.state.original = snapshot.original;
    this.state.graph = snapshot.graph;
    this.state.simplifiedGraph = snapshot.simplified_graph;
  }

  private async refreshSimplifiedLayout(): Promise<void> {
    if (!this.state.sessionId) return;
    this.state.layoutSimplified = (
      await this.api.getLayout(this.state.sessionId, "simplified")
    ).layout;
  }

  handleHover(hover: Hover | null): void {
    this.state.hover = hover;
    this.renderViews();
    if (
      hover &&
      this.state.correspondence &&
      this.state.partition &&
      this.state.sessionId
    ) {
      const sets = highlightFor(
        this.state.correspondence,
        this.state.partition,
        this.state.side,
        hover,
      );
      if (sets.classId !== null) {
        const sessionId = this.state.sessionId;
        const classId = sets.classId;
        this.hoverFetch = this.api
          .getClass(sessionId, classId)
          .then((resp) => {
            clear(this.memberList);
            for (const member of resp.members) {
              this.memberList.appendChild(
                el("li", { "data-member-id": String(member.id) }, member.label),
              );
            }
          })
          .catch(() => undefined);
      }
    }
  }

  private highlight(): HighlightSets {
    if (!this.state.hover || !this.state.correspondence || !this.state.partition) {
      return EMPTY_HIGHLIGHT;
    }
    return highlightFor(
      this.state.correspondence,
      this.state.partition,
      this.state.side,
      this.state.hover,
    );
  }

  renderAll(): void {
    if (this.state.barcode) {
      this.barcodePanel.render(
        this.state.barcode,
        this.state.epsilon,
        this.state.expanded,
      );
    }
    this.renderViews();
    this.renderLowerPanel();
  }

  private renderLowerPanel(): void {
    if (this.state.showPersistence) {
      this.memberList.style.display = "none";
      this.panels.persistence.style.display = "";
      renderPersistenceGraph(
        this.panels.persistence,
        this.state.persistence,
        this.state.epsilon,
      );
    } else {
      this.memberList.style.display = "";
      this.panels.persistence.style.display = "none";
    }
  }

  renderViews(): void {
    const s = this.state;
    const sets = this.highlight();
    if (s.original && s.layoutOriginal) {
      const isVertexSide = s.side === "vertex";
      renderHypergraph(this.panels.original, s.original, s.layoutOriginal, {
        encoding: s.encoding,
        width: PANEL_W,
        height: PANEL_H,
        highlightVertices: isVertexSide ? sets.originalIds : new Set(),
        highlightEdges: isVertexSide ? new Set() : sets.originalIds,
        classRole: null,
        onHoverVertex: (id) =>
          this.handleHover(
            id === null || !isVertexSide ? null : { kind: "original", id },
          ),
        onHoverEdge: (id) =>
          this.handleHover(
            id === null || isVertexSide ? null : { kind: "original", id },
          ),
      });
    }
    if (s.graph && s.correspondence && s.layoutOriginal) {
      renderGraph(
        this.panels.graph,
        s.graph,
        collapsedPositions(s.correspondence, s.layoutOriginal, s.side),
        {
          width: PANEL_W,
          height: PANEL_H,
          highlight: sets.collapsedIds,
          onHoverNode: (id) =>
            this.handleHover(id === null ? null : { kind: "collapsed", id }),
        },
      );
    }
    if (s.simplifiedGraph && s.partition && s.layoutSimplified) {
      renderGraph(
        this.panels.simplifiedGraph,
        s.simplifiedGraph,
        classPositions(s.partition, s.layoutSimplified, s.side),
        {
          width: PANEL_W,
          height: PANEL_H,
          highlight: sets.classId === null ? new Set() : new Set([sets.classId]),
          onHoverNode: (id) =>
            this.handleHover(id === null ? null : { kind: "class", id }),
        },
      );
    }
    if (s.simplified && s.layoutSimplified) {
      const isVertexSide = s.side === "vertex";
      const classHighlight =
        sets.classId === null ? new Set<number>() : new Set([sets.classId]);
      renderHypergraph(this.panels.simplified, s.simplified, s.layoutSimplified, {
        encoding: s.encoding,
        width: PANEL_W,
        height: PANEL_H,
        highlightVertices: isVertexSide ? classHighlight : new Set(),
        highlightEdges: isVertexSide ? new Set() : classHighlight,
        classRole: s.side === "vertex" ? "vertex" : "edge",
        onHoverVertex: (id) =>
          this.handleHover(
            id === null || !isVertexSide ? null : { kind: "class", id },
          ),
        onHoverEdge: (id) =>
          this.handleHover(
            id === null || isVertexSide ? null : { kind: "class", id },
          ),
      });
    }
  }
}

export function bootstrap(root: HTMLElement, baseUrl = ""): App {
  const api = new ApiClient(baseUrl);
  const header = el("div", { class: "header" });
  const file = el("input", { type: "file", accept: ".json", "data-role": "upload" });
  file.addEventListener("change", async () => {
    const chosen = file.files?.[0];
    if (!chosen) return;
    const doc = JSON.parse(await chosen.text()) as HypergraphDoc;
    void app.loadDocument(doc);
  });
  const demo = el("button", { type: "button", "data-role": "load-demo" }, "load demo");
  demo.addEventListener("click", () => void app.loadDocument(DEMO_DOC));
  header.appendChild(file);
  header.appendChild(demo);
  root.appendChild(header);
  const app = new App(root, api);
  return app;
}

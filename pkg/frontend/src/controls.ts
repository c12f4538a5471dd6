// Parameter control panel and visual-encoding switcher.

import { el } from "./dom.js";
import type { Encoding } from "./state.js";
import type { UiParams } from "./types.js";

export const ENCODINGS: Encoding[] = ["venn", "bipartite", "hybrid", "rainbow"];

export interface ControlCallbacks {
  onComputeBarcode(params: UiParams): void;
  onEncoding(encoding: Encoding): void;
}

export class ControlPanel {
  private form: HTMLFormElement;

  constructor(root: HTMLElement, private callbacks: ControlCallbacks) {
    this.form = el("form", { "data-role": "params-form" });
    this.form.addEventListener("submit", (ev) => ev.preventDefault());
    root.appendChild(this.form);

    this.form.appendChild(
      this.select("side", "Simplify", [
        ["edge", "hyperedges (line graph)"],
        ["vertex", "vertices (clique expansion)"],
      ]),
    );
    this.form.appendChild(this.number("s", "s", 1, 1));
    this.form.appendChild(
      this.select("weight", "Weights", [
        ["jaccard", "Jaccard"],
        ["overlap", "overlap size"],
      ]),
    );
    this.form.appendChild(this.checkbox("collapse_vertices", "Collapse vertices"));
    this.form.appendChild(this.checkbox("collapse_edges", "Collapse edges"));
    this.form.appendChild(
      this.select("singletons", "Singletons", [
        ["greyout", "grey out"],
        ["filter", "filter"],
      ]),
    );
    const compute = el(
      "button",
      { type: "button", "data-role": "compute-barcode" },
      "compute barcode",
    );
    compute.addEventListener("click", () =>
      this.callbacks.onComputeBarcode(this.params()),
    );
    this.form.appendChild(compute);

    const encodingRow = el("div", { class: "encoding-switch" });
    for (const enc of ENCODINGS) {
      const btn = el(
        "button",
        { type: "button", "data-role": "encoding", "data-encoding": enc },
        enc,
      );
      btn.addEventListener("click", () => this.callbacks.onEncoding(enc));
      encodingRow.appendChild(btn);
    }
    root.appendChild(encodingRow);
  }

  params(): UiParams {
    const data = new FormData(this.form);
    return {
      side: (data.get("side") as UiParams["side"]) ?? "edge",
      s: Number(data.get("s") ?? 1),
      weight: (data.get("weight") as UiParams["weight"]) ?? "jaccard",
      collapse_vertices: data.get("collapse_vertices") !== null,
      collapse_edges: data.get("collapse_edges") !== null,
      singletons: (data.get("singletons") as UiParams["singletons"]) ?? "greyout",
    };
  }

  private select(
    name: string,
    label: string,
    options: [string, string][],
  ): HTMLLabelElement {
    const wrap = el("label", {}, `${label} `);
    const select = el("select", { name });
    for (const [value, text] of options) {
      select.appendChild(el("option", { value }, text));
    }
    wrap.appendChild(select);
    return wrap;
  }

  private number(name: string, label: string, value: number, min: number): HTMLLabelElement {
    const wrap = el("label", {}, `${label} `);
    const input = el("input", {
      type: "number",
      name,
      value: String(value),
      min: String(min),
      step: "1",
    });
    wrap.appendChild(input);
    return wrap;
  }

  private checkbox(name: string, label: string): HTMLLabelElement {
    const wrap = el("label", {});
    wrap.appendChild(el("input", { type: "checkbox", name }));
    wrap.appendChild(document.createTextNode(` ${label}`));
    return wrap;
  }
}

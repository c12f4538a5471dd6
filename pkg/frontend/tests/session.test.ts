// @vitest-environment jsdom
//
// Scripted session against a live service: boot the real UI, upload the
// five-vertex demo hypergraph, drag the threshold across the first bar,
// expand that bar, and hover the merged class.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { bootstrap, DEMO_DOC, type App } from "../src/main.js";

const PORT = 8791;
const BASE = `http://127.0.0.1:${PORT}`;

let service: ChildProcess;

async function waitForService(timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      await fetch(`${BASE}/sessions/probe/metrics`);
      return; // any HTTP response means the server is up
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 200));
    }
  }
  throw new Error("service did not come up in time");
}

function stubRects(root: HTMLElement): void {
  // jsdom has no layout engine; pin the barcode panel's box for drag math
  const svg = root.querySelector(
    '[data-role="barcode-panel"]',
  ) as SVGSVGElement;
  svg.getBoundingClientRect = () =>
    ({ left: 0, top: 0, width: 420, height: 160, right: 420, bottom: 160,
       x: 0, y: 0, toJSON: () => ({}) } as DOMRect);
}

function simplifiedClassCount(root: HTMLElement): number {
  return root.querySelectorAll(
    '[data-panel="simplified"] [data-role="simplified-class"]',
  ).length;
}

describe("scripted UI session", () => {
  let root: HTMLElement;
  let app: App;

  beforeAll(async () => {
    service = spawn(
      "python3",
      ["-m", "uvicorn", "--factory", "hypersimp.service:create_app", "--port", String(PORT)],
      { stdio: "ignore" },
    );
    await waitForService();
  }, 30000);

  afterAll(() => {
    service.kill();
  });

  it("drag, expand, and hover drive the linked views", async () => {
    document.body.innerHTML = "";
    root = document.createElement("div");
    document.body.appendChild(root);
    app = bootstrap(root, BASE);

    await app.loadDocument(DEMO_DOC);
    await app.flush();
    expect(app.state.sessionId).toBeTruthy();
    const before = simplifiedClassCount(root);
    expect(before).toBe(3);

    // drag the threshold line across the first bar (length 1.5)
    stubRects(root);
    const svg = root.querySelector('[data-role="barcode-panel"]') as SVGSVGElement;
    // scale: pad 12, span 396, max epsilon 4.4 -> x=156 is eps ~1.6
    svg.dispatchEvent(new MouseEvent("mousedown", { clientX: 40, bubbles: true }));
    window.dispatchEvent(new MouseEvent("mousemove", { clientX: 100 }));
    window.dispatchEvent(new MouseEvent("mousemove", { clientX: 156 }));
    window.dispatchEvent(new MouseEvent("mouseup", {}));
    await app.flush();

    expect(app.state.epsilon).toBeGreaterThan(1.5);
    expect(app.state.epsilon).toBeLessThan(4);
    const merged = simplifiedClassCount(root);
    expect(merged).toBe(before - 1);

    // hover the merged class: its constituent labels appear in the lower panel
    const mergedNode = root.querySelector(
      '[data-panel="simplified"] [data-role="simplified-class"][data-class-id="0"]',
    ) as SVGCircleElement;
    mergedNode.dispatchEvent(new MouseEvent("mouseover", { bubbles: true }));
    await app.flush();
    const labels = [...root.querySelectorAll('[data-role="member-labels"] li')].map(
      (li) => li.textContent,
    );
    expect(labels).toEqual(["e1", "e2"]);

    // toggling expansion on the first bar restores the class count
    const bar = root.querySelector('[data-bar-id="0"]') as SVGLineElement;
    bar.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.flush();
    expect(simplifiedClassCount(root)).toBe(before);
    expect(app.state.expanded.has(0)).toBe(true);

    // and toggling again re-merges
    const barAgain = root.querySelector('[data-bar-id="0"]') as SVGLineElement;
    barAgain.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.flush();
    expect(simplifiedClassCount(root)).toBe(before - 1);
  }, 30000);

  it("encoding switcher re-renders panels including rainbow boxes", async () => {
    const buttons = root.querySelectorAll('[data-role="encoding"]');
    const rainbow = [...buttons].find(
      (b) => b.getAttribute("data-encoding") === "rainbow",
    ) as HTMLButtonElement;
    rainbow.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.flush();
    expect(
      root.querySelectorAll('[data-panel="original"] [data-role="rainbow-cell"]').length,
    ).toBe(15); // 5 vertices x 3 hyperedges

    const venn = [...buttons].find(
      (b) => b.getAttribute("data-encoding") === "venn",
    ) as HTMLButtonElement;
    venn.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.flush();
    expect(
      root.querySelectorAll('[data-panel="original"] [data-role="hull"]').length,
    ).toBe(3);
  }, 30000);

  it("persistence graph toggle renders the step function", async () => {
    const toggle = root.querySelector('[data-role="toggle-lower"]') as HTMLButtonElement;
    toggle.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.flush();
    const steps = root.querySelectorAll('[data-role="persistence-step"]');
    expect(steps.length).toBeGreaterThanOrEqual(2);
    toggle.dispatchEvent(new MouseEvent("click", { bubbles: true }));
  }, 30000);
});

// Lower-panel persistence graph: component count as a step function of the
// threshold, with the current epsilon marked.

import { clear, svgEl } from "./dom.js";
import { persistenceSteps } from "./state.js";

const WIDTH = 420;
const HEIGHT = 120;
const PAD = 20;

export function renderPersistenceGraph(
  svg: SVGSVGElement,
  steps: [number, number][],
  epsilon: number,
): void {
  clear(svg);
  svg.setAttribute("width", String(WIDTH));
  svg.setAttribute("height", String(HEIGHT));
  svg.setAttribute("data-role", "persistence-graph");
  if (!steps.length) return;
  const maxCount = steps[0][1] || 1;
  const maxEps = Math.max(steps[steps.length - 1][0] * 1.15, epsilon * 1.05, 1e-9);
  const x = (eps: number) => PAD + (Math.min(eps, maxEps) / maxEps) * (WIDTH - 2 * PAD);
  const y = (count: number) => HEIGHT - PAD - (count / maxCount) * (HEIGHT - 2 * PAD);
  for (const seg of persistenceSteps(steps, maxEps)) {
    svg.appendChild(
      svgEl("line", {
        x1: x(seg.x0), y1: y(seg.count), x2: x(seg.x1), y2: y(seg.count),
        stroke: "#1f4e79",
        "stroke-width": 2,
        "data-role": "persistence-step",
        "data-count": seg.count,
      }),
    );
  }
  svg.appendChild(
    svgEl("line", {
      x1: x(epsilon), y1: PAD / 2, x2: x(epsilon), y2: HEIGHT - PAD / 2,
      stroke: "#d62728",
      "stroke-width": 1.5,
      "stroke-dasharray": "4 2",
      "data-role": "persistence-epsilon",
    }),
  );
}

/**
 * Dendrogram rendering: elbow connectors on a height axis, with the
 * current threshold drawn as a horizontal cut line. Leaf x-positions
 * follow the merge-tree traversal so subtrees stay contiguous.
 */

import type { DendrogramJson } from "./types.js";
import { rootHeight } from "./cut.js";

const WIDTH = 860;
const HEIGHT = 240;
const PAD_X = 30;
const PAD_TOP = 12;
const PAD_BOTTOM = 18;

interface NodeGeom {
  x: number;
  height: number;
}

export function renderDendrogram(dendrogram: DendrogramJson, threshold: number | null): string {
  const n = dendrogram.n_leaves;
  if (n < 2) {
    return `<p class="empty">Dendrogram needs at least two flights.</p>`;
  }
  const top = rootHeight(dendrogram) * 1.05 || 1;
  const yOf = (h: number) => HEIGHT - PAD_BOTTOM - (h / top) * (HEIGHT - PAD_TOP - PAD_BOTTOM);

  // children of each internal node, then leaf order by depth-first walk
  const children = new Map<number, [number, number]>();
  dendrogram.merges.forEach(([left, right], step) => children.set(n + step, [left, right]));
  const leafOrder: number[] = [];
  const walk = (node: number) => {
    const pair = children.get(node);
    if (pair === undefined) {
      leafOrder.push(node);
      return;
    }
    walk(pair[0]);
    walk(pair[1]);
  };
  walk(2 * n - 2);

  const geom = new Map<number, NodeGeom>();
  const step = (WIDTH - 2 * PAD_X) / Math.max(n - 1, 1);
  leafOrder.forEach((leaf, i) => geom.set(leaf, { x: PAD_X + i * step, height: 0 }));

  const shapes: string[] = [];
  dendrogram.merges.forEach(([left, right, height], idx) => {
    const a = geom.get(left)!;
    const b = geom.get(right)!;
    const y = yOf(height);
    shapes.push(
      `<path d="M${a.x.toFixed(1)},${yOf(a.height).toFixed(1)} V${y.toFixed(1)} ` +
        `H${b.x.toFixed(1)} V${yOf(b.height).toFixed(1)}" fill="none"/>`,
    );
    geom.set(n + idx, { x: (a.x + b.x) / 2, height });
  });

  const ticks: string[] = [];
  const tickCount = 4;
  for (let i = 0; i <= tickCount; i++) {
    const h = (top * i) / tickCount;
    ticks.push(
      `<text x="${WIDTH - 4}" y="${(yOf(h) - 2).toFixed(1)}" text-anchor="end">${h.toPrecision(3)}</text>`,
    );
  }

  const cutLine =
    threshold === null
      ? ""
      : `<line class="cut" x1="${PAD_X}" x2="${WIDTH - PAD_X}" ` +
        `y1="${yOf(Math.min(threshold, top)).toFixed(1)}" y2="${yOf(Math.min(threshold, top)).toFixed(1)}"/>`;

  return (
    `<svg viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" aria-label="dendrogram">` +
    `<g class="tree">${shapes.join("")}</g>` +
    `<g class="ticks">${ticks.join("")}</g>` +
    cutLine +
    `</svg>`
  );
}

/**
 * Client-side dendrogram threshold cutting.
 *
 * Must agree with the server bit for bit: apply every merge with height
 * strictly below the threshold (heights are non-decreasing, so stop at
 * the first that is not), then number clusters by first appearance in
 * leaf order. The conformance suite replays slider positions against the
 * server's threshold mode to enforce the agreement.
 */

import type { DendrogramJson } from "./types.js";

/** Cluster index per leaf (leaf order) after cutting at threshold t. */
export function cutThreshold(dendrogram: DendrogramJson, t: number): number[] {
  const n = dendrogram.n_leaves;
  const members = new Map<number, number[]>();
  for (let leaf = 0; leaf < n; leaf++) members.set(leaf, [leaf]);

  for (let step = 0; step < dendrogram.merges.length; step++) {
    const [left, right, height] = dendrogram.merges[step];
    if (!(height < t)) break; // heights never decrease
    const merged = members.get(left)!.concat(members.get(right)!);
    members.delete(left);
    members.delete(right);
    members.set(n + step, merged);
  }

  const rootOf = new Array<number>(n);
  for (const [node, leaves] of members) {
    for (const leaf of leaves) rootOf[leaf] = node;
  }
  const indexOf = new Map<number, number>();
  const labels = new Array<number>(n);
  for (let leaf = 0; leaf < n; leaf++) {
    const root = rootOf[leaf];
    if (!indexOf.has(root)) indexOf.set(root, indexOf.size);
    labels[leaf] = indexOf.get(root)!;
  }
  return labels;
}

export function clusterCount(labels: number[]): number {
  return labels.length === 0 ? 0 : Math.max(...labels) + 1;
}

/** Root merge height; 0 for a single-leaf dendrogram. */
export function rootHeight(dendrogram: DendrogramJson): number {
  const merges = dendrogram.merges;
  return merges.length === 0 ? 0 : merges[merges.length - 1][2];
}

/**
 * A threshold that reproduces the k-cluster cut: the midpoint between
 * the (n-k)th and (n-k+1)th merge heights (or just above the root for
 * k = 1). Lets the slider land on an auto-selected clustering.
 */
export function thresholdForK(dendrogram: DendrogramJson, k: number): number {
  const n = dendrogram.n_leaves;
  const heights = dendrogram.merges.map((m) => m[2]);
  if (k <= 1) return rootHeight(dendrogram) * 1.01 + 1e-9;
  if (k >= n) return 0;
  const below = heights[n - k - 1];
  const above = heights[n - k];
  return below + (above - below) / 2;
}

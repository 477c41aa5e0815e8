import { describe, expect, it } from "vitest";

import { clusterCount, cutThreshold, rootHeight, thresholdForK } from "../src/cut.js";
import type { DendrogramJson } from "../src/types.js";

// 4 leaves: (0,1)@1, (2,3)@1, then the cross merge @10
const FOUR: DendrogramJson = {
  n_leaves: 4,
  merges: [
    [0, 1, 1.0],
    [2, 3, 1.0],
    [4, 5, 10.0],
  ],
};

describe("cutThreshold", () => {
  it("t = 0 leaves every flight alone", () => {
    expect(cutThreshold(FOUR, 0)).toEqual([0, 1, 2, 3]);
  });

  it("t between heights applies only the low merges", () => {
    expect(cutThreshold(FOUR, 5)).toEqual([0, 0, 1, 1]);
  });

  it("t above the root merges everything", () => {
    expect(cutThreshold(FOUR, 100)).toEqual([0, 0, 0, 0]);
  });

  it("threshold equal to a merge height keeps that merge unapplied", () => {
    expect(cutThreshold(FOUR, 1.0)).toEqual([0, 1, 2, 3]);
    expect(cutThreshold(FOUR, 10.0)).toEqual([0, 0, 1, 1]);
  });

  it("numbers clusters by first appearance in leaf order", () => {
    const skewed: DendrogramJson = {
      n_leaves: 4,
      merges: [
        [2, 3, 1.0],
        [1, 4, 2.0],
        [0, 5, 9.0],
      ],
    };
    // leaf 0 is alone, leaves {1,2,3} together; leaf 0 must get index 0
    expect(cutThreshold(skewed, 5)).toEqual([0, 1, 1, 1]);
  });

  it("lower thresholds refine higher ones", () => {
    const chain: DendrogramJson = {
      n_leaves: 5,
      merges: [
        [0, 1, 1.0],
        [2, 3, 2.0],
        [5, 6, 4.0],
        [4, 7, 8.0],
      ],
    };
    for (const [low, high] of [
      [0.5, 3],
      [1.5, 5],
      [3, 9],
    ]) {
      const fine = cutThreshold(chain, low);
      const coarse = cutThreshold(chain, high);
      // two leaves sharing a fine cluster must share the coarse one
      for (let i = 0; i < 5; i++) {
        for (let j = 0; j < 5; j++) {
          if (fine[i] === fine[j]) expect(coarse[i]).toBe(coarse[j]);
        }
      }
    }
  });
});

describe("helpers", () => {
  it("clusterCount", () => {
    expect(clusterCount([0, 0, 1, 2])).toBe(3);
    expect(clusterCount([])).toBe(0);
  });

  it("rootHeight", () => {
    expect(rootHeight(FOUR)).toBe(10.0);
    expect(rootHeight({ n_leaves: 1, merges: [] })).toBe(0);
  });

  it("thresholdForK reproduces each k on distinct heights", () => {
    const chain: DendrogramJson = {
      n_leaves: 4,
      merges: [
        [0, 1, 1.0],
        [4, 2, 3.0],
        [5, 3, 9.0],
      ],
    };
    for (const k of [1, 2, 3, 4]) {
      const labels = cutThreshold(chain, thresholdForK(chain, k));
      expect(clusterCount(labels)).toBe(k);
    }
    // tied heights are indivisible by any threshold: k=3 is unreachable
    // on FOUR because its two height-1 merges apply together or not at all
    expect(clusterCount(cutThreshold(FOUR, thresholdForK(FOUR, 3)))).not.toBe(3);
  });
});

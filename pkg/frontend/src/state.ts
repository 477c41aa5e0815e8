/**
 * View state for the explorer. The rendered cluster coloring always
 * derives from `labels`, which is either the server assignment (auto
 * mode) or the client-side threshold cut (manual mode) — the two agree
 * by construction whenever they describe the same threshold.
 */

import { cutThreshold, thresholdForK } from "./cut.js";
import type { ClusterResponse } from "./types.js";

export type CutMode = "auto" | "threshold";

export interface ViewState {
  response: ClusterResponse | null;
  mode: CutMode;
  threshold: number | null;
  labels: number[];
  highlighted: number | null;
  staleStats: boolean;
}

export function initialState(): ViewState {
  return {
    response: null,
    mode: "auto",
    threshold: null,
    labels: [],
    highlighted: null,
    staleStats: false,
  };
}

/** Install a fresh server response; slider lands on the served cut. */
export function withResponse(state: ViewState, response: ClusterResponse): ViewState {
  const serverLabels = response.flights.map((f) => f.cluster);
  const k = response.clusters.length;
  const threshold =
    response.request.mode.kind === "threshold" && response.request.mode.threshold !== undefined
      ? response.request.mode.threshold
      : thresholdForK(response.dendrogram, k);
  return {
    ...state,
    response,
    threshold,
    labels: serverLabels,
    highlighted: state.highlighted !== null && state.highlighted < k ? state.highlighted : null,
    staleStats: false,
  };
}

/** Recut locally at t; stats are stale until the server confirms. */
export function withSliderThreshold(state: ViewState, t: number): ViewState {
  if (state.response === null) return state;
  return {
    ...state,
    mode: "threshold",
    threshold: t,
    labels: cutThreshold(state.response.dendrogram, t),
    staleStats: true,
  };
}

export function toggleHighlight(state: ViewState, cluster: number): ViewState {
  return { ...state, highlighted: state.highlighted === cluster ? null : cluster };
}

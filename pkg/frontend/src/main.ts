/**
 * Explorer wiring: query form -> cluster request -> map + dendrogram +
 * stats; slider drags re-cut client-side immediately and fetch fresh
 * stats in the background (latest drag position wins).
 */

import { ApiError, Client } from "./api.js";
import { clusterCount, rootHeight } from "./cut.js";
import { asScore } from "./format.js";
import { renderDendrogram } from "./dendrogram.js";
import { renderLegend, renderMap } from "./mapview.js";
import { renderStatsTable } from "./statsTable.js";
import { initialState, toggleHighlight, withResponse, withSliderThreshold } from "./state.js";
import type { ClusterRequestBody } from "./types.js";

const client = new Client("");
let state = initialState();

const el = (id: string) => document.getElementById(id)!;
const input = (id: string) => el(id) as HTMLInputElement;
const select = (id: string) => el(id) as HTMLSelectElement;

const STATS_DEBOUNCE_MS = 250;
let debounceTimer: number | undefined;
let inFlight: AbortController | null = null;
let requestToken = 0;

function showError(message: string | null): void {
  const banner = el("error-banner");
  banner.textContent = message ?? "";
  banner.classList.toggle("hidden", message === null);
}

function requestBody(mode: ClusterRequestBody["mode"]): ClusterRequestBody {
  return {
    query: {
      origin: input("origin").value.trim().toUpperCase(),
      destination: input("dest").value.trim().toUpperCase(),
      date_from: input("date-from").value,
      date_to: input("date-to").value,
    },
    metric: select("metric").value,
    extraction_n: Math.max(1, Number(input("extract-n").value) || 1),
    linkage: select("linkage").value,
    mode,
  };
}

function paint(): void {
  const response = state.response;
  if (response === null) return;

  el("map").innerHTML = renderMap(response.flights, state.labels, state.highlighted);
  el("legend").innerHTML = renderLegend(state.labels, state.highlighted);
  el("dendrogram").innerHTML = renderDendrogram(response.dendrogram, state.threshold);

  const slider = input("threshold-slider");
  const top = rootHeight(response.dendrogram) * 1.05 || 1;
  slider.max = String(top);
  slider.step = String(top / 400);
  if (state.threshold !== null) slider.value = String(Math.min(state.threshold, top));
  slider.disabled = false;
  el("threshold-value").textContent =
    state.threshold === null ? "" : `t = ${state.threshold.toFixed(3)} (${clusterCount(state.labels)} clusters)`;

  const silhouette = response.silhouette;
  const panel = el("silhouette");
  if (silhouette === null) {
    const k = clusterCount(response.flights.map((f) => f.cluster));
    panel.textContent = `Silhouette: undefined for k = ${k}`;
  } else {
    panel.textContent =
      `Silhouette score ${asScore(silhouette.score)} at k = ${silhouette.k}` +
      ` — ${response.cut_source} (matrix ${response.timing.matrix_ms.toFixed(0)} ms)`;
  }
  panel.classList.toggle("stale", state.staleStats);

  el("stats").innerHTML =
    (state.staleStats ? `<p class="stale-note">stats refer to the last confirmed cut…</p>` : "") +
    renderStatsTable(response.stats);
}

async function runQuery(mode: ClusterRequestBody["mode"]): Promise<void> {
  showError(null);
  el("run").setAttribute("disabled", "");
  try {
    const response = await client.cluster(requestBody(mode));
    state = withResponse(state, response);
    state = { ...state, mode: mode.kind === "auto" ? "auto" : "threshold" };
    paint();
  } catch (err) {
    if (err instanceof ApiError) {
      showError(`Request failed (${err.status}): ${err.message}`);
    } else {
      showError(`Request failed: ${String(err)}`);
    }
  } finally {
    el("run").removeAttribute("disabled");
  }
}

/** Confirm the displayed cut with the server: fresh stats + silhouette. */
function scheduleStatsRefresh(threshold: number): void {
  window.clearTimeout(debounceTimer);
  debounceTimer = window.setTimeout(async () => {
    inFlight?.abort();
    const controller = new AbortController();
    inFlight = controller;
    const token = ++requestToken;
    try {
      const response = await client.cluster(
        requestBody({ kind: "threshold", threshold }),
        controller.signal,
      );
      if (token !== requestToken) return; // a newer drag position won
      state = withResponse(state, response);
      state = { ...state, mode: "threshold" };
      paint();
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") return;
      // keep the client-side partition rendered; flag the stats as stale
      state = { ...state, staleStats: true };
      paint();
      showError(`Stats refresh failed: ${err instanceof Error ? err.message : String(err)}`);
    }
  }, STATS_DEBOUNCE_MS);
}

function wire(): void {
  el("query-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const mode = select("mode").value;
    if (mode === "threshold") {
      const t = Number(input("threshold-slider").value) || 0;
      void runQuery({ kind: "threshold", threshold: t });
    } else {
      void runQuery({ kind: "auto" });
    }
  });

  input("threshold-slider").addEventListener("input", () => {
    const t = Number(input("threshold-slider").value);
    state = withSliderThreshold(state, t);
    select("mode").value = "threshold";
    paint();
    scheduleStatsRefresh(t);
  });

  document.addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest<HTMLElement>("[data-cluster]");
    if (target === null || target.dataset.cluster === undefined) return;
    const cluster = Number(target.dataset.cluster);
    state = toggleHighlight(state, cluster);
    paint();
    if (state.highlighted !== null) {
      document.getElementById(`stats-col-${cluster}`)?.scrollIntoView({ block: "nearest", inline: "nearest" });
    }
  });

  client
    .health()
    .then((h) => {
      el("backend-info").textContent = `${h.flights} flights loaded — ${h.backend}`;
    })
    .catch(() => showError("API unreachable — start the server with: routecluster serve --data-dir …"));
}

wire();

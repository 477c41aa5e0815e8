/**
 * Per-cluster statistics table, one column group per cluster, rows in
 * the canonical order: points, flights, speed, altitude, flight
 * distance, deviation from the airport-pair great circle. Values come
 * verbatim from the API response; the only client-side processing is
 * number formatting.
 */

import { clusterColor } from "./colors.js";
import { asCount, asPercent } from "./format.js";
import type { ClusterStatsJson } from "./types.js";

export const STATS_ROWS = [
  "Number of Points",
  "Number of Flights",
  "Speed (Knots)",
  "Altitude (Hundred Feet)",
  "Flight Distance (nm)",
  "Deviation with GCD",
] as const;

function meanSd(pair: { mean: number; sd: number }): string {
  return `Mean: ${asCount(pair.mean)} &nbsp; SD: ${asCount(pair.sd)}`;
}

export function renderStatsTable(stats: ClusterStatsJson[]): string {
  if (stats.length === 0) {
    return `<p class="empty">No statistics to show — run a query first.</p>`;
  }
  const header = stats
    .map(
      (s) =>
        `<th id="stats-col-${s.cluster}" data-cluster="${s.cluster}">` +
        `<span class="swatch" style="background:${clusterColor(s.cluster)}"></span>` +
        `Cluster ${s.cluster + 1}</th>`,
    )
    .join("");
  const cells = (render: (s: ClusterStatsJson) => string) =>
    stats.map((s) => `<td data-cluster="${s.cluster}">${render(s)}</td>`).join("");

  const rows = [
    `<tr><th>${STATS_ROWS[0]}</th>${cells((s) => asCount(s.n_points))}</tr>`,
    `<tr><th>${STATS_ROWS[1]}</th>${cells((s) => asCount(s.n_flights))}</tr>`,
    `<tr><th>${STATS_ROWS[2]}</th>${cells((s) => meanSd(s.speed_kt))}</tr>`,
    `<tr><th>${STATS_ROWS[3]}</th>${cells((s) => meanSd(s.altitude_ff))}</tr>`,
    `<tr><th>${STATS_ROWS[4]}</th>${cells((s) => meanSd(s.flight_distance_nm))}</tr>`,
    `<tr><th>${STATS_ROWS[5]}</th>${cells((s) => asPercent(s.deviation_gcd_pct))}</tr>`,
  ].join("\n");

  return `<table class="stats"><thead><tr><th></th>${header}</tr></thead><tbody>${rows}</tbody></table>`;
}

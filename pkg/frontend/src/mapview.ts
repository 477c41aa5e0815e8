/**
 * Flight-path map: plain SVG polylines in an equirectangular projection
 * fitted to the data, over a light graticule. One path per flight,
 * stroked with its cluster color; a highlighted cluster is emphasized
 * and the rest dimmed.
 */

import { clusterColor } from "./colors.js";
import { escapeHtml } from "./format.js";
import type { FlightJson } from "./types.js";

const WIDTH = 860;
const HEIGHT = 560;
const PAD = 24;

interface Bounds {
  minLat: number;
  maxLat: number;
  minLon: number;
  maxLon: number;
}

function dataBounds(flights: FlightJson[]): Bounds {
  let minLat = Infinity, maxLat = -Infinity, minLon = Infinity, maxLon = -Infinity;
  for (const f of flights) {
    for (const [lat, lon] of f.polyline) {
      if (lat < minLat) minLat = lat;
      if (lat > maxLat) maxLat = lat;
      if (lon < minLon) minLon = lon;
      if (lon > maxLon) maxLon = lon;
    }
  }
  const latSpan = Math.max(maxLat - minLat, 0.5);
  const lonSpan = Math.max(maxLon - minLon, 0.5);
  return {
    minLat: minLat - latSpan * 0.05,
    maxLat: maxLat + latSpan * 0.05,
    minLon: minLon - lonSpan * 0.05,
    maxLon: maxLon + lonSpan * 0.05,
  };
}

export function project(bounds: Bounds, lat: number, lon: number): [number, number] {
  const x = PAD + ((lon - bounds.minLon) / (bounds.maxLon - bounds.minLon)) * (WIDTH - 2 * PAD);
  const y = PAD + ((bounds.maxLat - lat) / (bounds.maxLat - bounds.minLat)) * (HEIGHT - 2 * PAD);
  return [x, y];
}

function graticule(bounds: Bounds): string {
  const lines: string[] = [];
  const lonStep = niceStep(bounds.maxLon - bounds.minLon);
  const latStep = niceStep(bounds.maxLat - bounds.minLat);
  for (let lon = Math.ceil(bounds.minLon / lonStep) * lonStep; lon <= bounds.maxLon; lon += lonStep) {
    const [x1, y1] = project(bounds, bounds.minLat, lon);
    const [, y2] = project(bounds, bounds.maxLat, lon);
    lines.push(`<line x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x1.toFixed(1)}" y2="${y2.toFixed(1)}"/>`);
    lines.push(`<text x="${(x1 + 3).toFixed(1)}" y="${HEIGHT - 8}">${lon.toFixed(0)}&#176;</text>`);
  }
  for (let lat = Math.ceil(bounds.minLat / latStep) * latStep; lat <= bounds.maxLat; lat += latStep) {
    const [x1, y1] = project(bounds, lat, bounds.minLon);
    const [x2] = project(bounds, lat, bounds.maxLon);
    lines.push(`<line x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" y2="${y1.toFixed(1)}"/>`);
    lines.push(`<text x="6" y="${(y1 - 3).toFixed(1)}">${lat.toFixed(0)}&#176;</text>`);
  }
  return `<g class="graticule">${lines.join("")}</g>`;
}

function niceStep(span: number): number {
  for (const step of [0.25, 0.5, 1, 2, 5, 10, 20]) {
    if (span / step <= 12) return step;
  }
  return 30;
}

/** One polyline per flight; `labels[i]` is the cluster of `flights[i]`. */
export function renderMap(
  flights: FlightJson[],
  labels: number[],
  highlighted: number | null,
): string {
  if (flights.length === 0) {
    return `<p class="empty">No flights to draw.</p>`;
  }
  const bounds = dataBounds(flights);
  const paths = flights
    .map((flight, i) => {
      const cluster = labels[i];
      const points = flight.polyline
        .map(([lat, lon]) => project(bounds, lat, lon).map((v) => v.toFixed(1)).join(","))
        .join(" L");
      const dim = highlighted !== null && highlighted !== cluster;
      return (
        `<path d="M${points}" fill="none" stroke="${clusterColor(cluster)}"` +
        ` stroke-width="${dim ? 1 : highlighted === cluster ? 2.4 : 1.4}"` +
        ` opacity="${dim ? 0.18 : 0.85}" data-cluster="${cluster}"` +
        `><title>${escapeHtml(flight.flight_id)} (cluster ${cluster + 1})</title></path>`
      );
    })
    .join("\n");
  return (
    `<svg viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" aria-label="clustered flight paths">` +
    graticule(bounds) +
    `<g class="paths">${paths}</g></svg>`
  );
}

/** Legend entries: swatch, cluster name, flight count; click to highlight. */
export function renderLegend(labels: number[], highlighted: number | null): string {
  const counts = new Map<number, number>();
  for (const c of labels) counts.set(c, (counts.get(c) ?? 0) + 1);
  const entries = [...counts.entries()]
    .sort((a, b) => a[0] - b[0])
    .map(([cluster, count]) => {
      const active = highlighted === cluster ? " active" : "";
      return (
        `<button class="legend-entry${active}" data-cluster="${cluster}">` +
        `<span class="swatch" style="background:${clusterColor(cluster)}"></span>` +
        `Cluster ${cluster + 1} (${count} flight${count === 1 ? "" : "s"})</button>`
      );
    })
    .join("");
  return `<div class="legend">${entries}</div>`;
}

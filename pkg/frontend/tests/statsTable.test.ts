import { describe, expect, it } from "vitest";

import { renderStatsTable, STATS_ROWS } from "../src/statsTable.js";
import type { ClusterStatsJson } from "../src/types.js";

// response-shaped fixture in the canonical table layout
const FIXTURE: ClusterStatsJson[] = [
  {
    cluster: 0,
    n_points: 13036,
    n_flights: 212,
    speed_kt: { mean: 382, sd: 17 },
    altitude_ff: { mean: 223, sd: 19 },
    flight_distance_nm: { mean: 420, sd: 45 },
    deviation_gcd_pct: 10.0,
  },
  {
    cluster: 1,
    n_points: 391,
    n_flights: 5,
    speed_kt: { mean: 370, sd: 15 },
    altitude_ff: { mean: 232, sd: 12 },
    flight_distance_nm: { mean: 415, sd: 35 },
    deviation_gcd_pct: 7.8,
  },
];

describe("renderStatsTable", () => {
  it("renders every schema row label", () => {
    const html = renderStatsTable(FIXTURE);
    for (const label of STATS_ROWS) {
      expect(html).toContain(label);
    }
  });

  it("renders fixture values verbatim with table formatting", () => {
    const html = renderStatsTable(FIXTURE);
    expect(html).toContain("Cluster 1");
    expect(html).toContain("Cluster 2");
    expect(html).toContain(">13036<");
    expect(html).toContain(">212<");
    expect(html).toContain(">391<");
    expect(html).toContain(">5<");
    expect(html).toContain("Mean: 382 &nbsp; SD: 17");
    expect(html).toContain("Mean: 370 &nbsp; SD: 15");
    expect(html).toContain("Mean: 223 &nbsp; SD: 19");
    expect(html).toContain("Mean: 420 &nbsp; SD: 45");
    expect(html).toContain("10.0%");
    expect(html).toContain("7.8%");
  });

  it("counts are integers and deviation keeps one decimal", () => {
    const html = renderStatsTable([
      {
        ...FIXTURE[0],
        n_points: 77,
        speed_kt: { mean: 381.6, sd: 16.7 },
        deviation_gcd_pct: 1.949,
      },
    ]);
    expect(html).toContain(">77<");
    expect(html).toContain("Mean: 382 &nbsp; SD: 17");
    expect(html).toContain("1.9%");
  });

  it("empty stats render the empty-state message", () => {
    expect(renderStatsTable([])).toContain("No statistics");
  });

  it("column headers carry cluster ids for highlight scrolling", () => {
    const html = renderStatsTable(FIXTURE);
    expect(html).toContain('id="stats-col-0"');
    expect(html).toContain('id="stats-col-1"');
    expect(html).toContain('data-cluster="1"');
  });
});

/** JSON shapes exchanged with the clustering API. */

export interface DendrogramJson {
  n_leaves: number;
  merges: [number, number, number][]; // [left id, right id, height]
}

export interface SilhouetteJson {
  score: number;
  k: number;
  per_sample: Record<string, number>;
}

export interface ClusterStatsJson {
  cluster: number;
  n_points: number;
  n_flights: number;
  speed_kt: { mean: number; sd: number };
  altitude_ff: { mean: number; sd: number };
  flight_distance_nm: { mean: number; sd: number };
  deviation_gcd_pct: number;
}

export interface FlightJson {
  flight_id: string;
  cluster: number;
  n_points: number;
  polyline: [number, number][]; // [lat, lon]
}

export interface ClusterResponse {
  request: {
    origin: string;
    destination: string;
    date_from: string;
    date_to: string;
    metric: string;
    extraction_n: number;
    linkage: string;
    mode: { kind: string; threshold?: number; k?: number };
  };
  n_flights: number;
  clusters: { index: number; n_flights: number; flight_ids: string[] }[];
  flights: FlightJson[];
  dendrogram: DendrogramJson;
  silhouette: SilhouetteJson | null;
  cut_source: string;
  airport_gcd_nm: number;
  stats: ClusterStatsJson[];
  timing: { matrix_ms: number; cluster_ms: number };
}

export interface ClusterRequestBody {
  query: { origin: string; destination: string; date_from: string; date_to: string };
  metric: string;
  extraction_n: number;
  linkage: string;
  mode: { kind: "auto" | "threshold" | "k"; threshold?: number; k?: number };
}

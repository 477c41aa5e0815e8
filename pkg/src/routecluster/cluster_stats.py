"""Per-cluster descriptive statistics.

For each cluster: point and flight counts, speed and altitude mean/SD
over every member point, flown-distance mean/SD over member flights, and
the percent by which the mean flown path length exceeds the straight
airport-pair great-circle distance ("deviation"). Statistics always use
the raw (unextracted) points so reported numbers do not drift with the
extraction factor, and SDs are population SDs (descriptive, not
inferential, use).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ValidationError
from .geo import path_length_nm
from .hcluster import Clustering
from .tracks import FlightTrack


@dataclass(frozen=True)
class ClusterStats:
    cluster_index: int
    n_flights: int
    n_points: int
    speed_kt_mean: float
    speed_kt_sd: float
    altitude_ff_mean: float
    altitude_ff_sd: float
    flight_distance_nm_mean: float
    flight_distance_nm_sd: float
    deviation_gcd_pct: float

    def to_json_dict(self) -> dict:
        return {
            "cluster": self.cluster_index,
            "n_points": self.n_points,
            "n_flights": self.n_flights,
            "speed_kt": {"mean": self.speed_kt_mean, "sd": self.speed_kt_sd},
            "altitude_ff": {"mean": self.altitude_ff_mean, "sd": self.altitude_ff_sd},
            "flight_distance_nm": {"mean": self.flight_distance_nm_mean, "sd": self.flight_distance_nm_sd},
            "deviation_gcd_pct": self.deviation_gcd_pct,
        }


def compute_stats(
    flights: Sequence[FlightTrack],
    clustering: Clustering,
    airport_gcd_nm: float,
) -> list[ClusterStats]:
    """Table-style statistics for every cluster, in cluster-index order."""
    if airport_gcd_nm <= 0:
        raise ValidationError(f"airport great-circle distance must be > 0, got {airport_gcd_nm}")
    labels = clustering.labels
    for f in flights:
        if f.flight_id not in labels:
            raise ValidationError(f"flight {f.flight_id!r} is not labeled in the clustering")

    k = clustering.k
    grouped: list[list[FlightTrack]] = [[] for _ in range(k)]
    for f in flights:
        grouped[labels[f.flight_id]].append(f)

    out = []
    for index, members in enumerate(grouped):
        if not members:
            continue  # clustering may cover flights not passed in
        speeds = np.array([p.speed_kt for f in members for p in f.points])
        alts = np.array([p.altitude_ff for f in members for p in f.points])
        dists = np.array([path_length_nm(f.positions()) for f in members])
        mean_dist = float(dists.mean())
        out.append(
            ClusterStats(
                cluster_index=index,
                n_flights=len(members),
                n_points=int(speeds.size),
                speed_kt_mean=float(speeds.mean()),
                speed_kt_sd=float(speeds.std()),
                altitude_ff_mean=float(alts.mean()),
                altitude_ff_sd=float(alts.std()),
                flight_distance_nm_mean=mean_dist,
                flight_distance_nm_sd=float(dists.std()),
                deviation_gcd_pct=100.0 * (mean_dist - airport_gcd_nm) / airport_gcd_nm,
            )
        )
    return out

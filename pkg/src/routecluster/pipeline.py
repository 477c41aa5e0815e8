"""Query-to-report pipeline shared by the CLI and the HTTP API.

A cluster request names a stored query, a metric, an extraction factor, a
linkage and a cut mode; the response carries everything an interactive
client needs: per-cluster flight lists, transport polylines, the full
dendrogram (so a client can re-cut thresholds without another round
trip), the silhouette report when defined, per-cluster statistics and
wall-clock timings. Apart from the timing block the response is a pure
function of (store contents, request).
"""

from __future__ import annotations

import math
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass, field

from .cluster_stats import compute_stats
from .errors import EmptyQueryError, UndefinedSilhouetteError, ValidationError
from .hcluster import Linkage, build_dendrogram, cut_k, cut_threshold
from .metrics import DistanceMatrix, MetricKind, build_matrix
from .quality import auto_cut, silhouette
from .sampling import extract
from .tracks import FlightTrack, TrackQuery, TrackStore

MODE_AUTO = "auto"
MODE_THRESHOLD = "threshold"
MODE_K = "k"


@dataclass(frozen=True)
class ClusterMode:
    kind: str
    threshold: float | None = None
    k: int | None = None

    def __post_init__(self):
        if self.kind not in (MODE_AUTO, MODE_THRESHOLD, MODE_K):
            raise ValidationError(f"unknown mode {self.kind!r}")
        if self.kind == MODE_THRESHOLD and self.threshold is None:
            raise ValidationError("threshold mode requires a threshold value")
        if self.kind == MODE_K and self.k is None:
            raise ValidationError("k mode requires a cluster count")

    def describe(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.threshold is not None:
            out["threshold"] = self.threshold
        if self.k is not None:
            out["k"] = self.k
        return out


@dataclass(frozen=True)
class ClusterRequest:
    query: TrackQuery
    metric: MetricKind = MetricKind.GEOGRAPHIC
    extraction_n: int = 1
    linkage: Linkage = Linkage.AVERAGE
    mode: ClusterMode = field(default_factory=lambda: ClusterMode(MODE_AUTO))

    def __post_init__(self):
        if self.extraction_n < 1:
            raise ValidationError(f"extraction factor must be >= 1, got {self.extraction_n}")
        if self.mode.kind == MODE_THRESHOLD:
            t = self.mode.threshold
            if t < 0:
                raise ValidationError(f"threshold must be >= 0, got {t}")
            # a threshold beyond 2 cannot be a cosine distance; it is
            # almost certainly nautical miles meant for the geo metric
            if self.metric is MetricKind.COSINE and t > self.metric.max_distance():
                raise ValidationError(
                    f"threshold {t} exceeds the {self.metric.value} metric's range "
                    f"[0, {self.metric.max_distance():g}] (unit mismatch?)"
                )

    def cache_key(self) -> tuple:
        q = self.query
        return (q.origin, q.destination, q.date_from, q.date_to, self.metric.value, self.extraction_n)


class MatrixCache:
    """Small LRU cache of distance matrices keyed by (query, metric, n).

    Threshold experiments replay the same query with different cuts; the
    matrix is the expensive part and never changes for a fixed key. Safe
    under concurrent access; concurrent misses on the same key may both
    compute, last writer wins (matrices for equal keys are identical).
    """

    def __init__(self, maxsize: int = 8):
        self.maxsize = maxsize
        self._lock = threading.Lock()
        self._entries: OrderedDict[tuple, tuple[tuple[str, ...], DistanceMatrix]] = OrderedDict()

    def get(self, key: tuple, labels: tuple[str, ...]) -> DistanceMatrix | None:
        with self._lock:
            hit = self._entries.get(key)
            if hit is None or hit[0] != labels:
                return None
            self._entries.move_to_end(key)
            return hit[1]

    def put(self, key: tuple, labels: tuple[str, ...], matrix: DistanceMatrix) -> None:
        with self._lock:
            self._entries[key] = (labels, matrix)
            self._entries.move_to_end(key)
            while len(self._entries) > self.maxsize:
                self._entries.popitem(last=False)


def _transport_polyline(flight: FlightTrack, max_points: int) -> list[list[float]]:
    positions = flight.positions()
    if len(positions) > max_points:
        positions = extract(positions, math.ceil(len(positions) / max_points))
    return [[p.lat, p.lon] for p in positions]


def _cut(matrix: DistanceMatrix, dendrogram, mode: ClusterMode):
    """Apply the requested cut; silhouette is None when undefined for the cut."""
    if mode.kind == MODE_AUTO:
        return auto_cut(matrix, dendrogram)
    if mode.kind == MODE_THRESHOLD:
        clustering = cut_threshold(dendrogram, mode.threshold)
    else:
        clustering = cut_k(dendrogram, mode.k)
    try:
        report = silhouette(matrix, clustering)
    except UndefinedSilhouetteError:
        report = None
    return clustering, report


def run_cluster(
    store: TrackStore,
    request: ClusterRequest,
    workers: int = 1,
    cache: MatrixCache | None = None,
    max_polyline_points: int = 400,
) -> dict:
    """Execute the full pipeline and assemble the JSON-ready response."""
    flights = store.query(request.query)
    if not flights:
        q = request.query
        raise EmptyQueryError(
            f"no flights matched {q.origin}->{q.destination} {q.date_from}..{q.date_to}"
        )
    labels = tuple(f.flight_id for f in flights)

    key = request.cache_key()
    matrix = cache.get(key, labels) if cache is not None else None
    t0 = time.perf_counter()
    if matrix is None:
        matrix = build_matrix(flights, request.metric, n=request.extraction_n, workers=workers)
        if cache is not None:
            cache.put(key, labels, matrix)
    matrix_ms = (time.perf_counter() - t0) * 1000.0

    t1 = time.perf_counter()
    dendrogram = build_dendrogram(matrix, request.linkage)
    clustering, report = _cut(matrix, dendrogram, request.mode)
    cluster_ms = (time.perf_counter() - t1) * 1000.0

    gcd_nm = store.airport_gcd_nm(request.query.origin, request.query.destination)
    stats = compute_stats(flights, clustering, gcd_nm)

    members = clustering.members()
    return {
        "request": {
            "origin": request.query.origin,
            "destination": request.query.destination,
            "date_from": request.query.date_from.isoformat(),
            "date_to": request.query.date_to.isoformat(),
            "metric": request.metric.value,
            "extraction_n": request.extraction_n,
            "linkage": request.linkage.value,
            "mode": request.mode.describe(),
        },
        "n_flights": len(flights),
        "clusters": [
            {"index": i, "n_flights": len(fids), "flight_ids": fids}
            for i, fids in enumerate(members)
        ],
        "flights": [
            {
                "flight_id": f.flight_id,
                "cluster": clustering.labels[f.flight_id],
                "n_points": len(f.points),
                "polyline": _transport_polyline(f, max_polyline_points),
            }
            for f in flights
        ],
        "dendrogram": dendrogram.to_json_dict(),
        "silhouette": None if report is None else {
            "score": report.score,
            "k": report.k,
            "per_sample": report.per_sample,
        },
        "cut_source": clustering.source,
        "airport_gcd_nm": gcd_nm,
        "stats": [s.to_json_dict() for s in stats],
        "timing": {"matrix_ms": matrix_ms, "cluster_ms": cluster_ms},
    }


def response_to_geojson(response: dict, store: TrackStore) -> dict:
    """FeatureCollection with one full-resolution LineString per flight."""
    features = []
    for entry in response["flights"]:
        flight = store.flights[entry["flight_id"]]
        features.append({
            "type": "Feature",
            "geometry": {
                "type": "LineString",
                "coordinates": [[p.position.lon, p.position.lat] for p in flight.points],
            },
            "properties": {"flight_id": entry["flight_id"], "cluster": entry["cluster"]},
        })
    return {"type": "FeatureCollection", "features": features}

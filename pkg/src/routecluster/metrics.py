"""Flight-to-flight distance models and distance-matrix construction.

Two metrics are supported:

* geographic — mean great-circle distance (nautical miles) over
  index-paired extracted points; range [0, pi*R].
* cosine — 1 minus the mean cosine similarity between paired
  consecutive-difference direction vectors, built in raw (lat, lon)
  degree space; unitless, range [0, 2]. Direction vectors make this
  metric translation-invariant and direction-sensitive: straight
  parallel same-direction tracks score 0 here while the geographic
  metric reports their lateral offset.

Matrix construction is the hot path (O(flights^2 * points) kernel work)
and runs on the compiled backend when available. Every entry is a pure
function of its two tracks, so the matrix is bit-identical regardless of
worker count or evaluation order.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DegenerateTrackError, InsufficientPointsError, ValidationError
from .geo import EARTH_RADIUS_NM
from .sampling import extract
from .tracks import FlightTrack


class MetricKind(enum.Enum):
    GEOGRAPHIC = "geographic"
    COSINE = "cosine"

    @classmethod
    def parse(cls, name: str) -> "MetricKind":
        aliases = {"geo": cls.GEOGRAPHIC, "geographic": cls.GEOGRAPHIC, "cosine": cls.COSINE}
        try:
            return aliases[name.lower()]
        except KeyError:
            raise ValidationError(f"unknown metric {name!r} (expected geo or cosine)") from None

    def max_distance(self) -> float:
        if self is MetricKind.GEOGRAPHIC:
            return float(np.pi) * EARTH_RADIUS_NM
        return 2.0


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise flight distances under one metric."""

    labels: tuple[str, ...]
    d: np.ndarray
    metric: MetricKind
    extraction_n: int

    def __post_init__(self):
        m = self.d
        if m.shape != (len(self.labels), len(self.labels)):
            raise ValidationError("matrix shape does not match labels")
        if not np.isfinite(m).all():
            raise ValidationError("matrix contains non-finite entries")
        if (m < 0).any() or np.diagonal(m).any() or not np.array_equal(m, m.T):
            raise ValidationError("matrix must be symmetric, non-negative, zero-diagonal")

    @property
    def n(self) -> int:
        return len(self.labels)


def _geo_arrays(tracks_points: list[list], n: int):
    """Padded (sin lat, cos lat, lon) radian arrays of extracted positions."""
    extracted = [extract(pts, n) for pts in tracks_points]
    lengths = np.array([len(e) for e in extracted], dtype=np.int64)
    width = int(lengths.max())
    lat = np.zeros((len(extracted), width))
    lon = np.zeros((len(extracted), width))
    for i, pts in enumerate(extracted):
        lat[i, : len(pts)] = np.radians([p.lat for p in pts])
        lon[i, : len(pts)] = np.radians([p.lon for p in pts])
    return np.sin(lat), np.cos(lat), lon, lengths


def _vector_arrays(tracks_points: list[list], n: int, labels: Sequence[str]):
    """Padded consecutive-difference vectors (degrees) of extracted positions."""
    dlats, dlons = [], []
    for label, pts in zip(labels, tracks_points):
        ex = extract(pts, n)
        if len(ex) < 2:
            raise InsufficientPointsError(
                f"flight {label!r}: {len(ex)} point(s) after extraction (n={n}), need >= 2"
            )
        coords = np.array([(p.lat, p.lon) for p in ex])
        delta = np.diff(coords, axis=0)
        dlats.append(delta[:, 0])
        dlons.append(delta[:, 1])
    lengths = np.array([len(v) for v in dlats], dtype=np.int64)
    width = int(lengths.max())
    dlat = np.zeros((len(dlats), width))
    dlon = np.zeros((len(dlats), width))
    for i in range(len(dlats)):
        dlat[i, : lengths[i]] = dlats[i]
        dlon[i, : lengths[i]] = dlons[i]
    return dlat, dlon, lengths


def geo_distance(a: FlightTrack, b: FlightTrack, n: int = 1, backend=None) -> float:
    """Mean great-circle distance between two tracks, nautical miles."""
    kern = backend or _kernels.active
    sinlat, coslat, lon, lengths = _geo_arrays([a.positions(), b.positions()], n)
    return kern.mean_gcd_pair(sinlat, coslat, lon, lengths, EARTH_RADIUS_NM)


def cosine_distance(a: FlightTrack, b: FlightTrack, n: int = 1, backend=None) -> float:
    """Direction-vector cosine dissimilarity between two tracks, in [0, 2]."""
    kern = backend or _kernels.active
    dlat, dlon, lengths = _vector_arrays(
        [a.positions(), b.positions()], n, [a.flight_id, b.flight_id]
    )
    d = kern.cosine_pair(dlat, dlon, lengths)
    if np.isnan(d):
        raise DegenerateTrackError(
            f"flights {a.flight_id!r} and {b.flight_id!r}: every vector pair skipped"
        )
    return d


def build_matrix(
    flights: Sequence[FlightTrack],
    metric: MetricKind,
    n: int = 1,
    workers: int = 1,
    backend=None,
) -> DistanceMatrix:
    """Pairwise distance matrix over a flight set.

    Rows are distributed round-robin over `workers` threads; the kernels
    release the GIL, so this scales on the compiled backend. Output is
    independent of worker count.
    """
    if not flights:
        raise ValidationError("build_matrix requires at least one flight")
    kern = backend or _kernels.active
    labels = tuple(f.flight_id for f in flights)
    count = len(flights)
    out = np.zeros((count, count))
    if count > 1:
        points = [f.positions() for f in flights]
        if metric is MetricKind.GEOGRAPHIC:
            sinlat, coslat, lon, lengths = _geo_arrays(points, n)
            args = (sinlat, coslat, lon, lengths, EARTH_RADIUS_NM)
            fill = kern.gcd_rows
        else:
            dlat, dlon, lengths = _vector_arrays(points, n, labels)
            args = (dlat, dlon, lengths)
            fill = kern.cosine_rows

        workers = max(1, min(workers, count - 1))
        row_sets = [np.arange(w, count - 1, workers, dtype=np.int64) for w in range(workers)]
        if workers == 1:
            fill(*args, row_sets[0], out)
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(fill, *args, rows, out) for rows in row_sets]
                for fut in futures:
                    fut.result()

        bad = np.argwhere(np.isnan(out))
        if len(bad):
            i, j = bad[0]
            raise DegenerateTrackError(
                f"flights {labels[i]!r} and {labels[j]!r}: every vector pair skipped"
            )
    return DistanceMatrix(labels=labels, d=out, metric=metric, extraction_n=n)

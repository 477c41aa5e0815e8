"""Silhouette values and automatic selection of the best dendrogram cut.

A sample's silhouette is (b - a) / max(a, b) with a the mean distance to
its own cluster's other members and b the smallest mean distance to any
other cluster; the score is the mean over all samples. Samples alone in
their cluster take value 0 (a is undefined for singletons, and tiny
clusters do occur in real route data).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooFewFlightsError, UndefinedSilhouetteError, ValidationError
from .hcluster import Clustering, Dendrogram, cut_k, with_source
from .metrics import DistanceMatrix


@dataclass(frozen=True)
class SilhouetteReport:
    per_sample: dict[str, float]
    score: float
    k: int


def silhouette(matrix: DistanceMatrix, clustering: Clustering) -> SilhouetteReport:
    """Per-sample silhouette values and their mean for a clustering.

    Defined only for 2 <= k <= n - 1.
    """
    if clustering.flight_ids != matrix.labels:
        raise ValidationError("clustering and matrix cover different flights")
    n = matrix.n
    k = clustering.k
    if k < 2 or k > n - 1:
        raise UndefinedSilhouetteError(f"silhouette undefined for k={k} with n={n}")

    assign = np.array(clustering.assignments)
    counts = np.bincount(assign, minlength=k)
    # sums[i, c] = total distance from sample i to every member of cluster c
    sums = np.zeros((n, k))
    for c in range(k):
        sums[:, c] = matrix.d[:, assign == c].sum(axis=1)

    own = counts[assign]
    with np.errstate(invalid="ignore", divide="ignore"):
        a = sums[np.arange(n), assign] / (own - 1)
    mean_to = sums / counts[np.newaxis, :]
    mean_to[np.arange(n), assign] = np.inf
    b = mean_to.min(axis=1)

    denom = np.maximum(a, b)
    values = np.where(own == 1, 0.0, np.where(denom == 0, 0.0, (b - a) / np.where(denom == 0, 1.0, denom)))
    score = float(values.mean())
    return SilhouetteReport(
        per_sample={fid: float(v) for fid, v in zip(matrix.labels, values)},
        score=score,
        k=k,
    )


def auto_cut(
    matrix: DistanceMatrix,
    dendrogram: Dendrogram,
    max_k: int | None = None,
) -> tuple[Clustering, SilhouetteReport]:
    """Cut at the k in 2..n-1 with the highest silhouette score.

    Every candidate k is evaluated (the dendrogram makes each cut cheap);
    max_k caps the search for very large queries. Exact score ties go to
    the smaller k, preferring the coarser clustering.
    """
    n = dendrogram.n_leaves
    if n < 3:
        raise TooFewFlightsError(f"automatic cut needs >= 3 flights, got {n}")
    upper = n - 1 if max_k is None else min(max_k, n - 1)
    if upper < 2:
        raise ValidationError(f"max_k={max_k} leaves no valid cluster count")

    best: tuple[Clustering, SilhouetteReport] | None = None
    for k in range(2, upper + 1):
        clustering = cut_k(dendrogram, k)
        report = silhouette(matrix, clustering)
        if best is None or report.score > best[1].score:
            best = (clustering, report)
    clustering, report = best
    return with_source(clustering, "auto-silhouette"), report

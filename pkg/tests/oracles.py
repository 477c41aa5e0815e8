"""Independent reference implementations used only by the test suite.

These deliberately take the most direct route (haversine instead of law of
cosines, explicit member lists instead of incremental matrix updates,
per-sample loops instead of vectorized math) so that agreement with the
library is meaningful. Nothing here imports the implementation under test.
"""

from __future__ import annotations

import math

EARTH_RADIUS_NM = 3440.065


def haversine_nm(lat1, lon1, lat2, lon2):
    """Great-circle distance from the haversine formula, nautical miles."""
    phi1, phi2 = math.radians(lat1), math.radians(lat2)
    dphi = math.radians(lat2 - lat1)
    dlam = math.radians(lon2 - lon1)
    h = math.sin(dphi / 2) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2) ** 2
    return 2 * EARTH_RADIUS_NM * math.asin(min(1.0, math.sqrt(h)))


def leg_sum_nm(coords):
    """Path length as the plain sum of per-leg haversine distances."""
    return sum(
        haversine_nm(a[0], a[1], b[0], b[1]) for a, b in zip(coords, coords[1:])
    )


def mean_pairwise_gcd_nm(coords_a, coords_b):
    """Average haversine distance over index-paired coordinates (equal lengths)."""
    assert len(coords_a) == len(coords_b)
    total = 0.0
    for (la, lo), (lb, lob) in zip(coords_a, coords_b):
        total += haversine_nm(la, lo, lb, lob)
    return total / len(coords_a)


def brute_force_merges(matrix, linkage):
    """Agglomerative clustering by direct recomputation from member lists.

    Clusters are kept as (node_id, [leaf indices]) pairs; the distance
    between two clusters is recomputed from the original matrix at every
    step (mean, max or min over all cross pairs). Ties break on the
    lexicographically smallest (min id, max id) pair. Returns the merge
    list [(left_id, right_id, height)] with new ids n, n+1, ...
    """
    n = len(matrix)
    clusters = {i: [i] for i in range(n)}
    merges = []
    next_id = n
    while len(clusters) > 1:
        best = None
        for i in sorted(clusters):
            for j in sorted(clusters):
                if j <= i:
                    continue
                cross = [matrix[p][q] for p in clusters[i] for q in clusters[j]]
                if linkage == "average":
                    d = sum(cross) / len(cross)
                elif linkage == "complete":
                    d = max(cross)
                elif linkage == "single":
                    d = min(cross)
                else:
                    raise ValueError(linkage)
                if best is None or d < best[0]:
                    best = (d, i, j)
        d, i, j = best
        clusters[next_id] = clusters.pop(i) + clusters.pop(j)
        merges.append((i, j, d))
        next_id += 1
    return merges


def partition_at_k(merges, n, k):
    """Set-of-frozensets partition after applying the first n - k merges."""
    members = {i: frozenset([i]) for i in range(n)}
    for step, (left, right, _h) in enumerate(merges[: n - k]):
        members[n + step] = members.pop(left) | members.pop(right)
    return set(members.values())


def silhouette_direct(matrix, labels):
    """Per-sample silhouette values straight from the defining formula."""
    n = len(labels)
    clusters = {}
    for idx, lab in enumerate(labels):
        clusters.setdefault(lab, []).append(idx)
    values = []
    for i in range(n):
        own = clusters[labels[i]]
        if len(own) == 1:
            values.append(0.0)
            continue
        a = sum(matrix[i][j] for j in own if j != i) / (len(own) - 1)
        b = min(
            sum(matrix[i][j] for j in other) / len(other)
            for lab, other in clusters.items()
            if lab != labels[i]
        )
        denom = max(a, b)
        values.append(0.0 if denom == 0 else (b - a) / denom)
    return values


def stats_direct(point_rows, flight_distances, gcd_nm):
    """Descriptive statistics recomputed with explicit running sums.

    point_rows: list of (speed, altitude) over every member point.
    flight_distances: per-flight path lengths in the cluster.
    Returns (n_points, speed mean/sd, altitude mean/sd, distance mean/sd,
    deviation percent), all with population (divide-by-count) SD.
    """

    def mean_sd(xs):
        m = sum(xs) / len(xs)
        var = sum((x - m) ** 2 for x in xs) / len(xs)
        return m, math.sqrt(var)

    speeds = [r[0] for r in point_rows]
    alts = [r[1] for r in point_rows]
    sp = mean_sd(speeds)
    al = mean_sd(alts)
    di = mean_sd(flight_distances)
    deviation = 100.0 * (di[0] - gcd_nm) / gcd_nm
    return len(point_rows), sp, al, di, deviation

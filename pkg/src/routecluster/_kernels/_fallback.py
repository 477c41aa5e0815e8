"""Pure-numpy implementations of the pairwise-distance kernels.

Used when the compiled extension is unavailable (or explicitly forced via
ROUTECLUSTER_PURE=1). Semantics are identical to the native kernels:

* pairing of unequal-length sequences is index-proportional with
  k = min(len_a, len_b), indices floor(i*len/k);
* identical paired fixes contribute exactly 0 to the mean great-circle
  distance;
* direction-vector pairs that are componentwise equal score cosine
  similarity exactly +1 (covers the both-zero case), componentwise
  negated pairs exactly -1, pairs with exactly one zero vector are
  skipped, and a pair set with nothing left yields NaN (degenerate).

All kernels take padded 2-D float64 arrays of shape (n_tracks, max_len)
plus a per-track length vector; entries are pure functions of their two
rows, so any partition of the row set across workers produces the same
matrix bit for bit.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy-fallback"


def _pair_index(na: int, nb: int) -> tuple[np.ndarray, np.ndarray]:
    k = min(na, nb)
    i = np.arange(k, dtype=np.int64)
    return i * na // k, i * nb // k


def _gcd_entry(sinlat, coslat, lon, lengths, i, j, radius):
    ia, ib = _pair_index(lengths[i], lengths[j])
    sa, ca, la = sinlat[i, ia], coslat[i, ia], lon[i, ia]
    sb, cb, lb = sinlat[j, ib], coslat[j, ib], lon[j, ib]
    cos_angle = np.clip(sa * sb + ca * cb * np.cos(np.abs(la - lb)), -1.0, 1.0)
    arc = radius * np.arccos(cos_angle)
    arc[(sa == sb) & (ca == cb) & (la == lb)] = 0.0
    return float(arc.sum() / len(arc))


def _cosine_entry(dlat, dlon, lengths, i, j):
    ia, ib = _pair_index(lengths[i], lengths[j])
    ax, ay = dlat[i, ia], dlon[i, ia]
    bx, by = dlat[j, ib], dlon[j, ib]
    na2 = ax * ax + ay * ay
    nb2 = bx * bx + by * by
    same = (ax == bx) & (ay == by)
    opposite = (ax == -bx) & (ay == -by) & ~same
    keep = same | ((na2 != 0.0) & (nb2 != 0.0))
    if not keep.any():
        return float("nan")
    denom = np.where(keep & ~same, np.sqrt(na2) * np.sqrt(nb2), 1.0)
    sim = np.clip((ax * bx + ay * by) / denom, -1.0, 1.0)
    sim = np.where(same, 1.0, np.where(opposite, -1.0, sim))
    mean_sim = float(sim[keep].mean())
    return min(2.0, max(0.0, 1.0 - mean_sim))


def gcd_rows(sinlat, coslat, lon, lengths, radius, rows, out):
    """Fill out[i, j] = out[j, i] for each row i in `rows`, j > i."""
    n = sinlat.shape[0]
    for i in rows:
        for j in range(i + 1, n):
            d = _gcd_entry(sinlat, coslat, lon, lengths, i, j, radius)
            out[i, j] = d
            out[j, i] = d


def cosine_rows(dlat, dlon, lengths, rows, out):
    """Cosine-dissimilarity analog of gcd_rows; degenerate pairs become NaN."""
    n = dlat.shape[0]
    for i in rows:
        for j in range(i + 1, n):
            d = _cosine_entry(dlat, dlon, lengths, i, j)
            out[i, j] = d
            out[j, i] = d


def mean_gcd_pair(sinlat, coslat, lon, lengths, radius):
    """Mean great-circle distance for a 2-row padded array."""
    return _gcd_entry(sinlat, coslat, lon, lengths, 0, 1, radius)


def cosine_pair(dlat, dlon, lengths):
    """Cosine dissimilarity for a 2-row padded array (NaN if degenerate)."""
    return _cosine_entry(dlat, dlon, lengths, 0, 1)

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled pairwise-distance kernels.

Mirrors _fallback.py exactly; see that module for the semantic contract
(index-proportional pairing, identical-fix and zero-vector rules). The
row loops run without the GIL so a thread pool gets real parallelism.
"""

from libc.math cimport NAN, acos, cos, fabs, sqrt

import numpy as np

BACKEND_NAME = "cython-native"

ctypedef long long i64


cdef inline double _clamp(double x, double lo, double hi) noexcept nogil:
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x


cdef double _gcd_entry(const double[:, ::1] sinlat, const double[:, ::1] coslat,
                       const double[:, ::1] lon, const i64[::1] lengths,
                       Py_ssize_t i, Py_ssize_t j, double radius) noexcept nogil:
    cdef Py_ssize_t na = lengths[i]
    cdef Py_ssize_t nb = lengths[j]
    cdef Py_ssize_t k = na if na < nb else nb
    cdef Py_ssize_t t, ia, ib
    cdef double total = 0.0
    cdef double cos_angle
    for t in range(k):
        ia = (t * na) // k
        ib = (t * nb) // k
        if sinlat[i, ia] == sinlat[j, ib] and coslat[i, ia] == coslat[j, ib] \
                and lon[i, ia] == lon[j, ib]:
            continue  # identical fix contributes exactly 0
        cos_angle = sinlat[i, ia] * sinlat[j, ib] \
            + coslat[i, ia] * coslat[j, ib] * cos(fabs(lon[i, ia] - lon[j, ib]))
        total += radius * acos(_clamp(cos_angle, -1.0, 1.0))
    return total / k


cdef double _cosine_entry(const double[:, ::1] dlat, const double[:, ::1] dlon,
                          const i64[::1] lengths,
                          Py_ssize_t i, Py_ssize_t j) noexcept nogil:
    cdef Py_ssize_t na = lengths[i]
    cdef Py_ssize_t nb = lengths[j]
    cdef Py_ssize_t k = na if na < nb else nb
    cdef Py_ssize_t t, ia, ib, kept = 0
    cdef double ax, ay, bx, by, na2, nb2, total = 0.0, d
    for t in range(k):
        ia = (t * na) // k
        ib = (t * nb) // k
        ax = dlat[i, ia]
        ay = dlon[i, ia]
        bx = dlat[j, ib]
        by = dlon[j, ib]
        if ax == bx and ay == by:
            total += 1.0  # identical vectors, including two stationary fixes
            kept += 1
            continue
        if ax == -bx and ay == -by:
            total += -1.0  # exactly reversed vectors
            kept += 1
            continue
        na2 = ax * ax + ay * ay
        nb2 = bx * bx + by * by
        if na2 == 0.0 or nb2 == 0.0:
            continue  # one stationary vector: pair undefined, skipped
        total += _clamp((ax * bx + ay * by) / (sqrt(na2) * sqrt(nb2)), -1.0, 1.0)
        kept += 1
    if kept == 0:
        return NAN
    d = 1.0 - total / kept
    return _clamp(d, 0.0, 2.0)


def gcd_rows(const double[:, ::1] sinlat, const double[:, ::1] coslat,
             const double[:, ::1] lon, const i64[::1] lengths,
             double radius, const i64[::1] rows, double[:, ::1] out):
    """Fill out[i, j] = out[j, i] for each row i in `rows`, j > i."""
    cdef Py_ssize_t n = sinlat.shape[0]
    cdef Py_ssize_t r, i, j
    cdef double d
    with nogil:
        for r in range(rows.shape[0]):
            i = rows[r]
            for j in range(i + 1, n):
                d = _gcd_entry(sinlat, coslat, lon, lengths, i, j, radius)
                out[i, j] = d
                out[j, i] = d


def cosine_rows(const double[:, ::1] dlat, const double[:, ::1] dlon,
                const i64[::1] lengths, const i64[::1] rows, double[:, ::1] out):
    """Cosine-dissimilarity analog of gcd_rows; degenerate pairs become NaN."""
    cdef Py_ssize_t n = dlat.shape[0]
    cdef Py_ssize_t r, i, j
    cdef double d
    with nogil:
        for r in range(rows.shape[0]):
            i = rows[r]
            for j in range(i + 1, n):
                d = _cosine_entry(dlat, dlon, lengths, i, j)
                out[i, j] = d
                out[j, i] = d


def mean_gcd_pair(const double[:, ::1] sinlat, const double[:, ::1] coslat,
                  const double[:, ::1] lon, const i64[::1] lengths, double radius):
    """Mean great-circle distance for a 2-row padded array."""
    return _gcd_entry(sinlat, coslat, lon, lengths, 0, 1, radius)


def cosine_pair(const double[:, ::1] dlat, const double[:, ::1] dlon,
                const i64[::1] lengths):
    """Cosine dissimilarity for a 2-row padded array (NaN if degenerate)."""
    return _cosine_entry(dlat, dlon, lengths, 0, 1)

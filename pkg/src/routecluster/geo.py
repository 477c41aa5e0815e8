"""Spherical-earth geometry: great-circle distance and along-path length.

All distances are nautical miles on a sphere of radius EARTH_RADIUS_NM.
The radius is a process-wide constant; there is deliberately no per-call
override so every module reports distances on the same sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError

#: Mean earth radius in nautical miles, fixed for the whole process.
EARTH_RADIUS_NM = 3440.065


def normalize_lon(lon: float) -> float:
    """Wrap a longitude into [-180, 180]."""
    wrapped = math.fmod(lon + 180.0, 360.0)
    if wrapped < 0:
        wrapped += 360.0
    return wrapped - 180.0


@dataclass(frozen=True, slots=True)
class GeoPoint:
    """A latitude/longitude pair in decimal degrees.

    Longitude is wrapped into [-180, 180] at construction; latitude must
    already be in [-90, 90].
    """

    lat: float
    lon: float

    def __post_init__(self):
        if not -90.0 <= self.lat <= 90.0:
            raise ValidationError(f"latitude {self.lat} outside [-90, 90]")
        if not math.isfinite(self.lon):
            raise ValidationError(f"longitude {self.lon} is not finite")
        if not -180.0 <= self.lon <= 180.0:
            object.__setattr__(self, "lon", normalize_lon(self.lon))


def great_circle_nm(p: GeoPoint, q: GeoPoint) -> float:
    """Great-circle distance between two points, in nautical miles.

    Spherical law of cosines:

        R * arccos(sin(lat_p) sin(lat_q) + cos(lat_p) cos(lat_q) cos(|lon_p - lon_q|))

    The absolute longitude difference is used as-is without wrapping to
    <= 180 degrees: cos is even and 2*pi-periodic, so wrapping cannot
    change the result. The arccos argument is clamped to [-1, 1] to absorb
    floating-point excursions, and identical coordinates short-circuit to
    exactly 0.0 (the law-of-cosines sum can land one ulp below 1 and
    arccos would then return a spurious ~1e-8 rad).
    """
    if p.lat == q.lat and p.lon == q.lon:
        return 0.0
    phi1 = math.radians(p.lat)
    phi2 = math.radians(q.lat)
    dlon = math.radians(abs(p.lon - q.lon))
    cos_angle = math.sin(phi1) * math.sin(phi2) + math.cos(phi1) * math.cos(phi2) * math.cos(dlon)
    return EARTH_RADIUS_NM * math.acos(max(-1.0, min(1.0, cos_angle)))


def path_length_nm(points: Sequence[GeoPoint] | Iterable[GeoPoint]) -> float:
    """Sum of great-circle leg lengths over consecutive points.

    A single point has length 0. Empty input is a caller bug.
    """
    pts = list(points)
    if not pts:
        raise ValidationError("path_length_nm requires at least one point")
    return sum(great_circle_nm(a, b) for a, b in zip(pts, pts[1:]))

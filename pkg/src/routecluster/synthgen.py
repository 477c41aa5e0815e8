"""Deterministic synthetic trajectory scenarios.

Three archetypes cover the situations the clustering models are meant to
tell apart:

* two-bundles — two well-separated path families between a common
  airport pair (east/west route split).
* parallel-corridors — three same-direction corridors at staggered
  lateral offsets, the human-in-the-loop threshold playground.
* shared-corridor-divergent-arrivals — one shared enroute corridor that
  splits into two opposite-rotation arrival hooks over the final 20% of
  each track; spatially the groups nearly coincide, directionally they
  do not.

Noise is a per-flight smooth lateral offset (two low-frequency sine
terms), not per-point white noise, so direction vectors stay realistic.
The PRNG is numpy's default_rng (PCG64) seeded from the spec: the same
spec always yields bit-identical tracks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone

import numpy as np

from .errors import ValidationError
from .geo import GeoPoint
from .tracks import FlightTrack, TrackPoint

AIRPORTS: dict[str, tuple[float, float]] = {
    "CMH": (39.998, -82.892),
    "ATL": (33.640, -84.427),
    "SFO": (37.619, -122.375),
    "PIT": (40.491, -80.233),
    "PHL": (39.872, -75.241),
    "JFK": (40.640, -73.779),
}

_BASE_TIME = datetime(2014, 6, 1, tzinfo=timezone.utc)


class ScenarioKind(enum.Enum):
    TWO_BUNDLES = "two-bundles"
    PARALLEL_CORRIDORS = "parallel-corridors"
    SHARED_CORRIDOR = "shared-corridor-divergent-arrivals"

    @classmethod
    def parse(cls, name: str) -> "ScenarioKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValidationError(f"unknown scenario {name!r}") from None


@dataclass(frozen=True)
class ScenarioSpec:
    kind: ScenarioKind
    flights_per_group: int = 20
    points_per_flight: int = 80
    jitter_deg: float = 0.15
    seed: int = 20140601

    def __post_init__(self):
        if self.flights_per_group < 2:
            raise ValidationError("flights_per_group must be >= 2 (silhouette validity)")
        if self.points_per_flight < 10:
            raise ValidationError("points_per_flight must be >= 10")
        if self.jitter_deg < 0:
            raise ValidationError("jitter_deg must be >= 0")


def _smooth_jitter(rng: np.random.Generator, t: np.ndarray, amplitude: float) -> np.ndarray:
    # Two endpoint-vanishing sine modes; rng is always consumed so the
    # draw sequence does not depend on the amplitude value.
    a1, a2 = rng.normal(0.0, 1.0, size=2)
    return amplitude * (a1 * np.sin(np.pi * t) + 0.5 * a2 * np.sin(2 * np.pi * t))


def _profiles(rng: np.random.Generator, t: np.ndarray, cruise_speed_kt: float, cruise_alt_ff: float):
    speed = rng.normal(cruise_speed_kt, 12.0) + rng.normal(0.0, 3.0, size=t.size)
    ramp = np.clip(np.minimum(t, 1.0 - t) / 0.15, 0.0, 1.0)
    alt = max(0.0, rng.normal(cruise_alt_ff, 12.0)) * ramp
    return np.maximum(speed, 0.0), np.maximum(alt, 0.0)


def _track(fid, origin, destination, lats, lons, speeds, alts, start: datetime) -> FlightTrack:
    step_s = max(5, round(7200 / (len(lats) - 1)))
    points = tuple(
        TrackPoint(
            position=GeoPoint(float(lat), float(lon)),
            altitude_ff=float(alt),
            speed_kt=float(speed),
            timestamp=start + timedelta(seconds=i * step_s),
        )
        for i, (lat, lon, speed, alt) in enumerate(zip(lats, lons, speeds, alts))
    )
    return FlightTrack(fid, origin, destination, points)


def _corridor_scenario(spec, rng, origin, destination, group_offsets, lateral):
    """Straight interpolated paths plus per-group lateral bumps and jitter."""
    o_lat, o_lon = AIRPORTS[origin]
    d_lat, d_lon = AIRPORTS[destination]
    t = np.linspace(0.0, 1.0, spec.points_per_flight)
    bump = np.sin(np.pi * t)

    tracks, truth = [], []
    index = 0
    for group, offset in enumerate(group_offsets):
        for _ in range(spec.flights_per_group):
            lateral_offset = offset * bump + _smooth_jitter(rng, t, spec.jitter_deg)
            lats = o_lat + (d_lat - o_lat) * t
            lons = o_lon + (d_lon - o_lon) * t
            if lateral == "lat":
                lats = lats + lateral_offset
            else:
                lons = lons + lateral_offset
            speeds, alts = _profiles(rng, t, 430.0, 340.0)
            fid = f"{origin}{destination}{index:04d}"
            tracks.append(_track(fid, origin, destination, lats, lons, speeds, alts,
                                 _BASE_TIME + timedelta(hours=6 * index)))
            truth.append(group)
            index += 1
    return tracks, truth


def _shared_corridor_scenario(spec, rng):
    """Shared CMH-PHL corridor splitting into mirror-image arrival arcs.

    The final 20% of each track is a semicircle from the corridor gate
    into the destination: group 0 sweeps over the north side, group 1
    over the south side, so the two groups arrive from opposite
    directions while staying within a hook diameter of each other.
    """
    origin, destination = "CMH", "PHL"
    o_lat, o_lon = AIRPORTS[origin]
    d_lat, d_lon = AIRPORTS[destination]
    hook_radius = 0.25  # degrees; semicircle diameter = gate-to-airport distance
    center_lat, center_lon = d_lat, d_lon - hook_radius
    gate_lat, gate_lon = d_lat, d_lon - 2 * hook_radius

    n_hook = max(5, round(0.2 * spec.points_per_flight))
    n_enroute = spec.points_per_flight - n_hook
    t_enroute = np.linspace(0.0, 1.0, n_enroute, endpoint=False)
    # theta from pi (gate) to 0 (airport); group 1 mirrors below the axis
    theta = np.linspace(np.pi, 0.0, n_hook)

    t_full = np.linspace(0.0, 1.0, spec.points_per_flight)
    tracks, truth = [], []
    index = 0
    for group in range(2):
        side = 1.0 if group == 0 else -1.0
        for _ in range(spec.flights_per_group):
            enroute_lats = o_lat + (gate_lat - o_lat) * t_enroute
            enroute_lons = o_lon + (gate_lon - o_lon) * t_enroute
            hook_lats = center_lat + side * hook_radius * np.sin(theta)
            hook_lons = center_lon + hook_radius * np.cos(theta)
            lats = np.concatenate([enroute_lats, hook_lats]) + _smooth_jitter(rng, t_full, spec.jitter_deg)
            lons = np.concatenate([enroute_lons, hook_lons])
            speeds, alts = _profiles(rng, t_full, 390.0, 300.0)
            fid = f"{origin}{destination}{index:04d}"
            tracks.append(_track(fid, origin, destination, lats, lons, speeds, alts,
                                 _BASE_TIME + timedelta(hours=6 * index)))
            truth.append(group)
            index += 1
    return tracks, truth


def generate(spec: ScenarioSpec) -> tuple[list[FlightTrack], list[int]]:
    """Tracks plus ground-truth group labels for a scenario spec."""
    rng = np.random.default_rng(spec.seed)
    if spec.kind is ScenarioKind.TWO_BUNDLES:
        return _corridor_scenario(spec, rng, "CMH", "ATL", [1.5, -1.5], lateral="lon")
    if spec.kind is ScenarioKind.PARALLEL_CORRIDORS:
        return _corridor_scenario(spec, rng, "SFO", "PIT", [0.0, 1.4, 3.2], lateral="lat")
    if spec.kind is ScenarioKind.SHARED_CORRIDOR:
        return _shared_corridor_scenario(spec, rng)
    raise ValidationError(f"unknown scenario kind {spec.kind}")


def airports_csv_text() -> str:
    """The airport table for generated scenarios, in `code,lat,lon` format."""
    lines = ["code,lat,lon"]
    for code, (lat, lon) in AIRPORTS.items():
        lines.append(f"{code},{lat},{lon}")
    return "\n".join(lines) + "\n"

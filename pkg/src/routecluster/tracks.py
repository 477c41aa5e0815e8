"""Flight track data model, flat-file ingestion and querying.

Tracks live in memory: a store is loaded once from CSV/JSONL flat files
plus a small airport-location table, then queried read-only by
origin/destination pair and date range. Surveillance feeds are noisy, so
rows with unparseable or out-of-range fields are skipped and counted
instead of aborting the load.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyInputError, MissingAirportError, TrackFormatError, ValidationError
from .geo import GeoPoint, great_circle_nm

CSV_FIELDS = ["flight_id", "timestamp", "lat", "lon", "altitude_ff", "speed_kt", "origin", "destination"]


@dataclass(frozen=True, slots=True)
class TrackPoint:
    """One surveillance fix: position, altitude (hundreds of feet), ground speed."""

    position: GeoPoint
    altitude_ff: float
    speed_kt: float
    timestamp: datetime

    def __post_init__(self):
        if self.altitude_ff < 0:
            raise ValidationError(f"altitude_ff {self.altitude_ff} < 0")
        if self.speed_kt < 0:
            raise ValidationError(f"speed_kt {self.speed_kt} < 0")
        if self.timestamp.tzinfo is None:
            raise ValidationError("timestamp must be timezone-aware UTC")


@dataclass(frozen=True)
class FlightTrack:
    """An ordered, strictly time-ascending point sequence for one flight."""

    flight_id: str
    origin: str
    destination: str
    points: tuple[TrackPoint, ...]

    def __post_init__(self):
        if not self.points:
            raise ValidationError(f"flight {self.flight_id}: empty point list")
        for a, b in zip(self.points, self.points[1:]):
            if a.timestamp >= b.timestamp:
                raise ValidationError(f"flight {self.flight_id}: timestamps not strictly ascending")

    @property
    def start_date(self) -> date:
        return self.points[0].timestamp.date()

    def positions(self) -> list[GeoPoint]:
        return [p.position for p in self.points]


@dataclass(frozen=True, slots=True)
class AirportLocation:
    code: str
    position: GeoPoint


@dataclass(frozen=True, slots=True)
class TrackQuery:
    """Origin/destination pair plus an inclusive UTC date range."""

    origin: str
    destination: str
    date_from: date
    date_to: date

    def __post_init__(self):
        if self.date_from > self.date_to:
            raise ValidationError(f"date_from {self.date_from} after date_to {self.date_to}")


@dataclass
class ParseResult:
    tracks: list[FlightTrack]
    skipped_rows: int = 0


def _parse_timestamp(raw: str) -> datetime:
    ts = datetime.fromisoformat(raw.replace("Z", "+00:00"))
    if ts.tzinfo is None:
        raise ValueError("naive timestamp")
    return ts.astimezone(timezone.utc)


def _row_to_parts(row: dict) -> tuple[str, TrackPoint, str, str]:
    flight_id = str(row["flight_id"]).strip()
    if not flight_id:
        raise ValueError("empty flight_id")
    point = TrackPoint(
        position=GeoPoint(float(row["lat"]), float(row["lon"])),
        altitude_ff=float(row["altitude_ff"]),
        speed_kt=float(row["speed_kt"]),
        timestamp=_parse_timestamp(str(row["timestamp"])),
    )
    return flight_id, point, str(row["origin"]).strip(), str(row["destination"]).strip()


def parse_tracks(stream, fmt: str = "csv") -> ParseResult:
    """Parse a byte or text stream of track rows into FlightTracks.

    Rows that fail validation are skipped and counted, including rows that
    duplicate an earlier timestamp within the same flight (first kept).
    Raises TrackFormatError for a malformed CSV header or unknown format,
    EmptyInputError when no valid rows remain.
    """
    if isinstance(stream, bytes):
        stream = io.BytesIO(stream)
    text = io.TextIOWrapper(stream, encoding="utf-8") if isinstance(stream.read(0), bytes) else stream

    skipped = 0
    rows: dict[str, list[TrackPoint]] = {}
    endpoints: dict[str, tuple[str, str]] = {}

    if fmt == "csv":
        reader = csv.DictReader(text)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != CSV_FIELDS:
            raise TrackFormatError(f"expected header {','.join(CSV_FIELDS)}, got {reader.fieldnames}")
        raw_rows: Iterable[dict] = reader
    elif fmt == "jsonl":
        def _iter_jsonl():
            nonlocal skipped
            for line in text:
                line = line.strip()
                if not line:
                    continue
                try:
                    yield json.loads(line)
                except json.JSONDecodeError:
                    skipped += 1
        raw_rows = _iter_jsonl()
    else:
        raise TrackFormatError(f"unknown format {fmt!r} (expected csv or jsonl)")

    for row in raw_rows:
        try:
            flight_id, point, origin, destination = _row_to_parts(row)
        except (ValueError, TypeError, KeyError, ValidationError):
            skipped += 1
            continue
        if flight_id in endpoints and endpoints[flight_id] != (origin, destination):
            skipped += 1  # conflicting airport pair for the same flight
            continue
        endpoints.setdefault(flight_id, (origin, destination))
        rows.setdefault(flight_id, []).append(point)

    tracks = []
    for flight_id in rows:
        pts = sorted(rows[flight_id], key=lambda p: p.timestamp)
        deduped = [pts[0]]
        for p in pts[1:]:
            if p.timestamp == deduped[-1].timestamp:
                skipped += 1  # duplicate timestamp: keep first
            else:
                deduped.append(p)
        origin, destination = endpoints[flight_id]
        tracks.append(FlightTrack(flight_id, origin, destination, tuple(deduped)))

    if not tracks:
        raise EmptyInputError(f"no valid rows parsed ({skipped} skipped)")
    return ParseResult(tracks=tracks, skipped_rows=skipped)


def _format_timestamp(ts: datetime) -> str:
    return ts.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def write_tracks_csv(tracks: Sequence[FlightTrack], out) -> None:
    """Serialize tracks to the flat CSV format (inverse of parse_tracks)."""
    writer = csv.writer(out)
    writer.writerow(CSV_FIELDS)
    for t in tracks:
        for p in t.points:
            writer.writerow([
                t.flight_id,
                _format_timestamp(p.timestamp),
                repr(p.position.lat),
                repr(p.position.lon),
                repr(p.altitude_ff),
                repr(p.speed_kt),
                t.origin,
                t.destination,
            ])


def write_tracks_jsonl(tracks: Sequence[FlightTrack], out) -> None:
    for t in tracks:
        for p in t.points:
            out.write(json.dumps({
                "flight_id": t.flight_id,
                "timestamp": _format_timestamp(p.timestamp),
                "lat": p.position.lat,
                "lon": p.position.lon,
                "altitude_ff": p.altitude_ff,
                "speed_kt": p.speed_kt,
                "origin": t.origin,
                "destination": t.destination,
            }) + "\n")


def parse_airports(stream) -> dict[str, AirportLocation]:
    """Parse the `code,lat,lon` airport table CSV."""
    if isinstance(stream, bytes):
        stream = io.BytesIO(stream)
    text = io.TextIOWrapper(stream, encoding="utf-8") if isinstance(stream.read(0), bytes) else stream
    reader = csv.DictReader(text)
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["code", "lat", "lon"]:
        raise TrackFormatError(f"expected header code,lat,lon, got {reader.fieldnames}")
    table = {}
    for row in reader:
        code = row["code"].strip()
        table[code] = AirportLocation(code, GeoPoint(float(row["lat"]), float(row["lon"])))
    return table


@dataclass
class TrackStore:
    """Read-only in-memory collection of flights plus the airport table."""

    flights: dict[str, FlightTrack] = field(default_factory=dict)
    airports: dict[str, AirportLocation] = field(default_factory=dict)
    skipped_rows: int = 0

    @classmethod
    def load(cls, track_paths: Sequence[str | Path], airports_path: str | Path | None = None) -> "TrackStore":
        store = cls()
        for path in track_paths:
            path = Path(path)
            fmt = "jsonl" if path.suffix in (".jsonl", ".ndjson", ".json") else "csv"
            with open(path, "rb") as fh:
                result = parse_tracks(fh, fmt)
            store.add_tracks(result.tracks)
            store.skipped_rows += result.skipped_rows
        if airports_path is not None:
            with open(airports_path, "rb") as fh:
                store.airports = parse_airports(fh)
        return store

    def add_tracks(self, tracks: Iterable[FlightTrack]) -> None:
        for t in tracks:
            if t.flight_id in self.flights:
                raise ValidationError(f"duplicate flight_id {t.flight_id!r}")
            self.flights[t.flight_id] = t

    def query(self, q: TrackQuery) -> list[FlightTrack]:
        """Flights matching airports whose first-point date is in range, by flight_id."""
        hits = [
            t for t in self.flights.values()
            if t.origin == q.origin and t.destination == q.destination
            and q.date_from <= t.start_date <= q.date_to
        ]
        return sorted(hits, key=lambda t: t.flight_id)

    def airport_gcd_nm(self, origin: str, destination: str) -> float:
        """Great-circle distance between two airports in the table."""
        for code in (origin, destination):
            if code not in self.airports:
                raise MissingAirportError(code)
        return great_circle_nm(self.airports[origin].position, self.airports[destination].position)

import io
from datetime import date, datetime, timezone

import pytest

from routecluster.errors import (
    EmptyInputError,
    MissingAirportError,
    TrackFormatError,
    ValidationError,
)
from routecluster.geo import GeoPoint
from routecluster.tracks import (
    FlightTrack,
    ParseResult,
    TrackPoint,
    TrackQuery,
    TrackStore,
    parse_airports,
    parse_tracks,
    write_tracks_csv,
    write_tracks_jsonl,
)

HEADER = "flight_id,timestamp,lat,lon,altitude_ff,speed_kt,origin,destination\n"


def row(fid, ts, lat=40.0, lon=-83.0, alt=300, speed=400, origin="CMH", dest="ATL"):
    return f"{fid},{ts},{lat},{lon},{alt},{speed},{origin},{dest}\n"


def parse_csv(text):
    return parse_tracks(io.BytesIO(text.encode()), "csv")


class TestParseCsv:
    def test_basic_two_flights(self):
        text = HEADER
        for fid in ("FL1", "FL2"):
            for minute in range(5):
                text += row(fid, f"2014-06-01T12:0{minute}:00Z", lat=40.0 + minute * 0.1)
        result = parse_csv(text)
        assert {t.flight_id for t in result.tracks} == {"FL1", "FL2"}
        assert all(len(t.points) == 5 for t in result.tracks)
        assert result.skipped_rows == 0

    def test_rows_sorted_by_timestamp(self):
        text = HEADER
        text += row("FL1", "2014-06-01T12:02:00Z", lat=42.0)
        text += row("FL1", "2014-06-01T12:00:00Z", lat=40.0)
        text += row("FL1", "2014-06-01T12:01:00Z", lat=41.0)
        result = parse_csv(text)
        lats = [p.position.lat for p in result.tracks[0].points]
        assert lats == [40.0, 41.0, 42.0]

    def test_bad_latitude_row_skipped(self):
        text = HEADER
        for fid in ("FL1", "FL2"):
            for minute in range(5):
                text += row(fid, f"2014-06-01T12:0{minute}:00Z", lat=40.0 + minute * 0.1)
        text += row("FL1", "2014-06-01T12:09:00Z", lat=91.0)
        result = parse_csv(text)
        assert len(result.tracks) == 2
        assert sum(len(t.points) for t in result.tracks) == 10
        assert result.skipped_rows == 1

    def test_duplicate_timestamp_keeps_first(self):
        text = HEADER
        text += row("FL1", "2014-06-01T12:00:00Z", lat=40.0)
        text += row("FL1", "2014-06-01T12:00:00Z", lat=41.0)
        text += row("FL1", "2014-06-01T12:01:00Z", lat=42.0)
        result = parse_csv(text)
        assert [p.position.lat for p in result.tracks[0].points] == [40.0, 42.0]
        assert result.skipped_rows == 1

    def test_malformed_header(self):
        with pytest.raises(TrackFormatError):
            parse_csv("flight,when,lat,lon\nFL1,2014-06-01T12:00:00Z,40,-83\n")

    def test_empty_body_after_header(self):
        with pytest.raises(EmptyInputError):
            parse_csv(HEADER)

    def test_unknown_format(self):
        with pytest.raises(TrackFormatError):
            parse_tracks(io.BytesIO(b"x"), "parquet")


class TestParseJsonl:
    def test_round_trip(self):
        text = HEADER
        for minute in range(4):
            text += row("FL1", f"2014-06-01T12:0{minute}:00Z", lat=40.0 + minute)
        tracks = parse_csv(text).tracks

        buf = io.StringIO()
        write_tracks_jsonl(tracks, buf)
        reparsed = parse_tracks(io.BytesIO(buf.getvalue().encode()), "jsonl")
        assert reparsed.tracks == tracks

    def test_bad_line_skipped(self):
        line = (
            '{"flight_id": "FL1", "timestamp": "2014-06-01T12:00:00Z", "lat": 40.0,'
            ' "lon": -83.0, "altitude_ff": 300, "speed_kt": 400, "origin": "CMH",'
            ' "destination": "ATL"}\n'
        )
        blob = line + "{not json}\n" + line.replace("12:00", "12:01")
        result = parse_tracks(io.BytesIO(blob.encode()), "jsonl")
        assert len(result.tracks) == 1 and len(result.tracks[0].points) == 2
        assert result.skipped_rows == 1


class TestCsvRoundTrip:
    def test_parse_serialize_parse_idempotent(self):
        text = HEADER
        for fid in ("FL1", "FL2", "FL3"):
            for minute in range(6):
                text += row(fid, f"2014-06-01T12:0{minute}:00Z", lat=40.0 + minute * 0.017, lon=-83 - minute * 0.31)
        first = parse_csv(text).tracks

        buf = io.StringIO()
        write_tracks_csv(first, buf)
        second = parse_tracks(io.BytesIO(buf.getvalue().encode()), "csv").tracks
        assert second == first


class TestTrackTypes:
    def test_track_requires_ascending_timestamps(self):
        t0 = datetime(2014, 6, 1, tzinfo=timezone.utc)
        p = TrackPoint(GeoPoint(40, -83), 300, 400, t0)
        with pytest.raises(ValidationError):
            FlightTrack("F", "CMH", "ATL", (p, p))

    def test_point_rejects_negative_speed(self):
        t0 = datetime(2014, 6, 1, tzinfo=timezone.utc)
        with pytest.raises(ValidationError):
            TrackPoint(GeoPoint(40, -83), 300, -1.0, t0)

    def test_query_date_order(self):
        with pytest.raises(ValidationError):
            TrackQuery("CMH", "ATL", date(2014, 6, 22), date(2014, 6, 1))


def store_with(dates, origin="CMH", dest="ATL"):
    store = TrackStore()
    tracks = []
    for i, day in enumerate(dates):
        t0 = datetime(2014, 6, day, 12, 0, tzinfo=timezone.utc)
        points = tuple(
            TrackPoint(GeoPoint(40.0 - j * 0.5, -83.0), 300, 400, t0.replace(minute=j))
            for j in range(3)
        )
        tracks.append(FlightTrack(f"FL{i}", origin, dest, points))
    store.add_tracks(tracks)
    return store


class TestStoreQuery:
    def test_empty_store(self):
        q = TrackQuery("CMH", "ATL", date(2014, 6, 1), date(2014, 6, 22))
        assert TrackStore().query(q) == []

    def test_date_boundaries_inclusive(self):
        store = store_with([1, 22, 23])
        q = TrackQuery("CMH", "ATL", date(2014, 6, 1), date(2014, 6, 22))
        assert [t.flight_id for t in store.query(q)] == ["FL0", "FL1"]

    def test_mixed_airports_filtered_in_id_order(self):
        store = TrackStore()
        t0 = datetime(2014, 6, 2, tzinfo=timezone.utc)
        mk = lambda fid, origin, dest: FlightTrack(
            fid, origin, dest,
            tuple(TrackPoint(GeoPoint(40, -83), 300, 400, t0.replace(minute=j)) for j in range(2)),
        )
        store.add_tracks([
            mk("Z9", "CMH", "ATL"), mk("A1", "CMH", "ATL"),
            mk("B2", "CMH", "JFK"), mk("C3", "SFO", "PIT"),
            mk("M5", "CMH", "ATL"), mk("Q7", "ATL", "CMH"),
        ])
        q = TrackQuery("CMH", "ATL", date(2014, 6, 1), date(2014, 6, 22))
        assert [t.flight_id for t in store.query(q)] == ["A1", "M5", "Z9"]

    def test_unknown_airport_code_empty_result(self):
        store = store_with([1])
        q = TrackQuery("XXX", "YYY", date(2014, 6, 1), date(2014, 6, 22))
        assert store.query(q) == []

    def test_duplicate_flight_id_rejected(self):
        store = store_with([1])
        with pytest.raises(ValidationError):
            store.add_tracks(list(store.flights.values()))


class TestAirports:
    def test_airport_gcd(self):
        table = parse_airports(io.BytesIO(b"code,lat,lon\nAAA,0,0\nBBB,0,90\n"))
        store = TrackStore(airports=table)
        assert store.airport_gcd_nm("AAA", "BBB") == pytest.approx(5403.66, abs=0.1)
        assert store.airport_gcd_nm("AAA", "AAA") == 0.0

    def test_unknown_airport_raises(self):
        store = TrackStore(airports=parse_airports(io.BytesIO(b"code,lat,lon\nAAA,0,0\n")))
        with pytest.raises(MissingAirportError, match="XXXX"):
            store.airport_gcd_nm("AAA", "XXXX")

    def test_airport_header_checked(self):
        with pytest.raises(TrackFormatError):
            parse_airports(io.BytesIO(b"id,lat,lon\nAAA,0,0\n"))

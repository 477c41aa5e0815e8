import json
import subprocess
import sys

import pytest

from routecluster.cli import (
    EXIT_BAD_REQUEST,
    EXIT_EMPTY_RESULT,
    EXIT_MISSING_FILE,
    main,
)


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "routecluster", *argv],
        capture_output=True,
        text=True,
    )


@pytest.fixture(scope="module")
def fixture_files(tmp_path_factory):
    root = tmp_path_factory.mktemp("clidata")
    tracks = root / "tracks.csv"
    airports = root / "airports.csv"
    code = main([
        "synth", "--scenario", "parallel-corridors",
        "--flights-per-group", "5", "--points", "40",
        "--out", str(tracks), "--airports-out", str(airports),
    ])
    assert code == 0
    return tracks, airports


def cluster_args(tracks, airports, *extra):
    return [
        "cluster", "--data", str(tracks), "--airports", str(airports),
        "--origin", "SFO", "--dest", "PIT",
        "--from", "2014-06-01", "--to", "2014-06-22",
        *extra,
    ]


class TestClusterCommand:
    def test_auto_mode_report(self, fixture_files, tmp_path):
        tracks, airports = fixture_files
        out = tmp_path / "report.json"
        code = main(cluster_args(tracks, airports, "--metric", "geo", "--mode", "auto",
                                 "--out", str(out)))
        assert code == 0
        report = json.loads(out.read_text())
        assert report["request"]["metric"] == "geographic"
        assert report["n_flights"] == 15
        assert report["silhouette"]["score"] > 0.5
        assert report["stats"]

    def test_threshold_50_gives_three_corridors(self, fixture_files, tmp_path):
        tracks, airports = fixture_files
        out = tmp_path / "report.json"
        code = main(cluster_args(tracks, airports, "--metric", "geo",
                                 "--mode", "threshold", "--threshold", "50",
                                 "--out", str(out)))
        assert code == 0
        report = json.loads(out.read_text())
        assert len(report["clusters"]) == 3

    def test_geojson_export(self, fixture_files, tmp_path):
        tracks, airports = fixture_files
        out = tmp_path / "report.json"
        geo = tmp_path / "paths.geojson"
        code = main(cluster_args(tracks, airports, "--out", str(out), "--geojson", str(geo)))
        assert code == 0
        collection = json.loads(geo.read_text())
        assert collection["type"] == "FeatureCollection"
        assert len(collection["features"]) == 15
        assert all("cluster" in f["properties"] for f in collection["features"])

    def test_empty_query_distinct_exit(self, fixture_files, capsys):
        tracks, airports = fixture_files
        code = main([
            "cluster", "--data", str(tracks), "--airports", str(airports),
            "--origin", "CMH", "--dest", "ATL",
            "--from", "2014-06-01", "--to", "2014-06-22",
        ])
        assert code == EXIT_EMPTY_RESULT
        assert "no flights matched" in capsys.readouterr().err

    def test_missing_file_distinct_exit(self, fixture_files, tmp_path):
        _, airports = fixture_files
        code = main(cluster_args(tmp_path / "absent.csv", airports))
        assert code == EXIT_MISSING_FILE

    def test_unit_mismatch_distinct_exit(self, fixture_files):
        tracks, airports = fixture_files
        code = main(cluster_args(tracks, airports, "--metric", "cosine",
                                 "--mode", "threshold", "--threshold", "50"))
        assert code == EXIT_BAD_REQUEST

    def test_repeated_runs_byte_identical_excluding_timing(self, fixture_files, tmp_path):
        tracks, airports = fixture_files
        blobs = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            proc = run_cli(*cluster_args(tracks, airports, "--mode", "auto", "--out", str(out)))
            assert proc.returncode == 0, proc.stderr
            report = json.loads(out.read_text())
            del report["timing"]
            blobs.append(json.dumps(report, sort_keys=False).encode())
        assert blobs[0] == blobs[1]


class TestSynthCommand:
    def test_truth_output(self, tmp_path):
        out = tmp_path / "t.csv"
        truth = tmp_path / "truth.json"
        code = main([
            "synth", "--scenario", "two-bundles", "--flights-per-group", "2",
            "--points", "15", "--out", str(out), "--truth-out", str(truth),
        ])
        assert code == 0
        labels = json.loads(truth.read_text())
        assert len(labels) == 4 and set(labels.values()) == {0, 1}

    def test_bad_scenario(self, tmp_path):
        code = main(["synth", "--scenario", "wiggle", "--out", str(tmp_path / "t.csv")])
        assert code == EXIT_BAD_REQUEST

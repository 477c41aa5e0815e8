"""Command-line entry points.

Subcommands:

* cluster — run the full pipeline against flat-file track data and write
  a JSON report (optionally a GeoJSON of the clustered paths).
* serve — start the HTTP/JSON API (and the bundled web UI when built).
* synth — emit a synthetic scenario as track CSV for demos and testing.

Errors map to distinct exit codes so scripts can tell a missing file
from an empty query from an invalid parameter combination.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import date
from pathlib import Path

from . import __version__
from ._kernels import active_backend_name
from .errors import (
    DegenerateTrackError,
    EmptyInputError,
    EmptyQueryError,
    InsufficientPointsError,
    MissingAirportError,
    TooFewFlightsError,
    TrackFormatError,
    UndefinedSilhouetteError,
    ValidationError,
)
from .hcluster import Linkage
from .metrics import MetricKind
from .pipeline import ClusterMode, ClusterRequest, response_to_geojson, run_cluster
from .synthgen import ScenarioKind, ScenarioSpec, airports_csv_text, generate
from .tracks import TrackQuery, TrackStore, write_tracks_csv

EXIT_OK = 0
EXIT_MISSING_FILE = 3
EXIT_EMPTY_RESULT = 4
EXIT_NO_SILHOUETTE = 5
EXIT_BAD_REQUEST = 6
EXIT_DATA_ERROR = 7

_ERROR_CODES = [
    ((FileNotFoundError, IsADirectoryError, PermissionError), EXIT_MISSING_FILE),
    ((EmptyQueryError, EmptyInputError), EXIT_EMPTY_RESULT),
    ((TooFewFlightsError, UndefinedSilhouetteError), EXIT_NO_SILHOUETTE),
    ((ValidationError,), EXIT_BAD_REQUEST),
    ((TrackFormatError, MissingAirportError, InsufficientPointsError, DegenerateTrackError), EXIT_DATA_ERROR),
]


def _exit_code_for(err: Exception) -> int:
    for types, code in _ERROR_CODES:
        if isinstance(err, types):
            return code
    raise err


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="routecluster",
        description="Cluster flight paths between an airport pair by route.",
    )
    parser.add_argument("--version", action="version", version=f"routecluster {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    cluster = sub.add_parser("cluster", help="cluster a stored query and write a JSON report")
    cluster.add_argument("--data", action="append", required=True,
                         help="track CSV/JSONL file (repeatable)")
    cluster.add_argument("--airports", required=True, help="airport table CSV (code,lat,lon)")
    cluster.add_argument("--origin", required=True)
    cluster.add_argument("--dest", required=True)
    cluster.add_argument("--from", dest="date_from", required=True, type=date.fromisoformat,
                         metavar="YYYY-MM-DD")
    cluster.add_argument("--to", dest="date_to", required=True, type=date.fromisoformat,
                         metavar="YYYY-MM-DD")
    cluster.add_argument("--metric", default="geo", help="geo | cosine")
    cluster.add_argument("--mode", default="auto", choices=["auto", "threshold", "k"])
    cluster.add_argument("--threshold", type=float,
                         help="cut height for --mode threshold (nm for geo, [0,2] for cosine)")
    cluster.add_argument("--k", type=int, help="cluster count for --mode k")
    cluster.add_argument("--linkage", default="average", choices=["average", "complete", "single"])
    cluster.add_argument("--extract-n", dest="extract_n", type=int, default=1,
                         help="keep one point in every N (1 = no extraction)")
    cluster.add_argument("--workers", type=int, default=1)
    cluster.add_argument("--out", help="report path (default: stdout)")
    cluster.add_argument("--geojson", help="also write clustered paths as GeoJSON")

    serve = sub.add_parser("serve", help="start the HTTP/JSON API")
    serve.add_argument("--data-dir", required=True,
                       help="directory of track CSV/JSONL files plus airports.csv")
    serve.add_argument("--airports", help="airport table path (default: <data-dir>/airports.csv)")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8099)
    serve.add_argument("--workers", type=int, default=4, help="matrix-build worker threads")
    serve.add_argument("--ui-dir", help="static web UI directory to serve at /")

    synth = sub.add_parser("synth", help="emit a synthetic scenario as track CSV")
    synth.add_argument("--scenario", required=True,
                       help="two-bundles | parallel-corridors | shared-corridor-divergent-arrivals")
    synth.add_argument("--flights-per-group", type=int, default=20)
    synth.add_argument("--points", type=int, default=80)
    synth.add_argument("--jitter", type=float, default=0.15)
    synth.add_argument("--seed", type=int, default=20140601)
    synth.add_argument("--out", required=True, help="track CSV output path")
    synth.add_argument("--airports-out", help="also write the airport table CSV")
    synth.add_argument("--truth-out", help="also write ground-truth labels as JSON")
    return parser


def _load_store(data_paths, airports_path) -> TrackStore:
    for p in list(data_paths) + [airports_path]:
        if p is not None and not Path(p).exists():
            raise FileNotFoundError(f"no such file: {p}")
    return TrackStore.load(data_paths, airports_path)


def _cmd_cluster(args) -> int:
    store = _load_store(args.data, args.airports)
    mode = ClusterMode(kind=args.mode, threshold=args.threshold, k=args.k)
    request = ClusterRequest(
        query=TrackQuery(args.origin, args.dest, args.date_from, args.date_to),
        metric=MetricKind.parse(args.metric),
        extraction_n=args.extract_n,
        linkage=Linkage.parse(args.linkage),
        mode=mode,
    )
    response = run_cluster(store, request, workers=args.workers)

    text = json.dumps(response, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    if args.geojson:
        Path(args.geojson).write_text(
            json.dumps(response_to_geojson(response, store), indent=2) + "\n", encoding="utf-8"
        )

    sil = response["silhouette"]
    print(
        f"clustered {response['n_flights']} flights into {len(response['clusters'])} cluster(s)"
        + (f", silhouette {sil['score']:.3f} (k={sil['k']})" if sil else "")
        + f" [{active_backend_name()}]",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    data_dir = Path(args.data_dir)
    if not data_dir.is_dir():
        raise FileNotFoundError(f"no such directory: {data_dir}")
    if args.ui_dir and not Path(args.ui_dir).is_dir():
        raise FileNotFoundError(f"no such UI directory: {args.ui_dir}")
    airports = args.airports or data_dir / "airports.csv"
    track_files = sorted(
        p for p in data_dir.iterdir()
        if p.suffix in (".csv", ".jsonl") and p.resolve() != Path(airports).resolve()
    )
    if not track_files:
        raise EmptyInputError(f"no track files in {data_dir}")
    store = _load_store(track_files, airports)
    app = create_app(store, workers=args.workers, ui_dir=args.ui_dir)
    print(f"loaded {len(store.flights)} flights; kernel backend: {active_backend_name()}", file=sys.stderr)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def _cmd_synth(args) -> int:
    spec = ScenarioSpec(
        kind=ScenarioKind.parse(args.scenario),
        flights_per_group=args.flights_per_group,
        points_per_flight=args.points,
        jitter_deg=args.jitter,
        seed=args.seed,
    )
    tracks, truth = generate(spec)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_tracks_csv(tracks, fh)
    if args.airports_out:
        Path(args.airports_out).write_text(airports_csv_text(), encoding="utf-8")
    if args.truth_out:
        labels = {t.flight_id: g for t, g in zip(tracks, truth)}
        Path(args.truth_out).write_text(json.dumps(labels, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(tracks)} flights to {args.out}", file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"cluster": _cmd_cluster, "serve": _cmd_serve, "synth": _cmd_synth}
    try:
        return handlers[args.command](args)
    except Exception as err:  # noqa: BLE001 - single funnel to exit codes
        code = _exit_code_for(err)
        print(f"error: {err}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())

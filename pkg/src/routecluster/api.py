"""HTTP/JSON API powering the interactive clustering UI.

Endpoints:

* GET  /api/health  — liveness plus store and kernel-backend info.
* GET  /api/flights — query flights by airport pair and date range.
* POST /api/cluster — run the pipeline, returning clusters, polylines,
  the dendrogram (for client-side threshold re-cutting), silhouette and
  per-cluster statistics.

The track store is read-only after startup; the only shared mutable
state is the bounded LRU matrix cache, which makes repeated threshold
experiments on one query cheap.
"""

from __future__ import annotations

from datetime import date
from typing import Literal

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel, Field

from ._kernels import active_backend_name
from .errors import EmptyQueryError, RouteClusterError, ValidationError
from .hcluster import Linkage
from .metrics import MetricKind
from .pipeline import ClusterMode, ClusterRequest, MatrixCache, run_cluster
from .tracks import TrackQuery, TrackStore


class QueryModel(BaseModel):
    origin: str
    destination: str
    date_from: date
    date_to: date


class ModeModel(BaseModel):
    kind: Literal["auto", "threshold", "k"] = "auto"
    threshold: float | None = None
    k: int | None = None


class ClusterRequestModel(BaseModel):
    query: QueryModel
    metric: str = "geographic"
    extraction_n: int = Field(default=1, ge=1)
    linkage: str = "average"
    mode: ModeModel = Field(default_factory=ModeModel)


def _to_domain(body: ClusterRequestModel) -> ClusterRequest:
    return ClusterRequest(
        query=TrackQuery(body.query.origin, body.query.destination,
                         body.query.date_from, body.query.date_to),
        metric=MetricKind.parse(body.metric),
        extraction_n=body.extraction_n,
        linkage=Linkage.parse(body.linkage),
        mode=ClusterMode(kind=body.mode.kind, threshold=body.mode.threshold, k=body.mode.k),
    )


def create_app(
    store: TrackStore,
    workers: int = 4,
    cache_size: int = 8,
    ui_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="routecluster", version="0.1.0")
    cache = MatrixCache(maxsize=cache_size)

    @app.get("/api/health")
    def health():
        return {
            "status": "ok",
            "flights": len(store.flights),
            "airports": len(store.airports),
            "backend": active_backend_name(),
        }

    @app.get("/api/flights")
    def flights(
        origin: str,
        dest: str,
        date_from: date = Query(alias="from"),
        date_to: date = Query(alias="to"),
    ):
        try:
            query = TrackQuery(origin, dest, date_from, date_to)
        except ValidationError as err:
            raise HTTPException(status_code=422, detail=str(err)) from err
        return [
            {
                "flight_id": f.flight_id,
                "origin": f.origin,
                "destination": f.destination,
                "n_points": len(f.points),
                "first_seen": f.points[0].timestamp.isoformat(),
                "polyline": [[p.position.lat, p.position.lon] for p in f.points],
            }
            for f in store.query(query)
        ]

    @app.post("/api/cluster")
    def cluster(body: ClusterRequestModel):
        try:
            request = _to_domain(body)
            return run_cluster(store, request, workers=workers, cache=cache)
        except EmptyQueryError as err:
            raise HTTPException(status_code=404, detail=str(err)) from err
        except RouteClusterError as err:
            raise HTTPException(status_code=422, detail=str(err)) from err

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app

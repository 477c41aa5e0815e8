"""Flight-path clustering between origin/destination airport pairs.

Pipeline: query tracks -> pairwise distance matrix (geographic or
cosine metric, optional every-Nth point extraction) -> agglomerative
dendrogram -> silhouette-optimal or manual threshold cut -> per-cluster
descriptive statistics. Entry points: the `routecluster` CLI and the
HTTP/JSON API in routecluster.api.
"""

from .geo import EARTH_RADIUS_NM, GeoPoint, great_circle_nm, path_length_nm
from .hcluster import Clustering, Dendrogram, Linkage, build_dendrogram, cut_k, cut_threshold
from .metrics import DistanceMatrix, MetricKind, build_matrix, cosine_distance, geo_distance
from .quality import SilhouetteReport, auto_cut, silhouette
from .cluster_stats import ClusterStats, compute_stats
from .sampling import extract, pair_tracks
from .tracks import FlightTrack, TrackPoint, TrackQuery, TrackStore, parse_tracks

__version__ = "0.1.0"

__all__ = [
    "EARTH_RADIUS_NM",
    "GeoPoint",
    "great_circle_nm",
    "path_length_nm",
    "Clustering",
    "Dendrogram",
    "Linkage",
    "build_dendrogram",
    "cut_k",
    "cut_threshold",
    "DistanceMatrix",
    "MetricKind",
    "build_matrix",
    "cosine_distance",
    "geo_distance",
    "SilhouetteReport",
    "auto_cut",
    "silhouette",
    "ClusterStats",
    "compute_stats",
    "extract",
    "pair_tracks",
    "FlightTrack",
    "TrackPoint",
    "TrackQuery",
    "TrackStore",
    "parse_tracks",
    "__version__",
]

"""Exception types raised by the clustering pipeline.

Each maps to a distinct CLI exit code (see cli.py) and a 4xx response in
the HTTP API, so callers can tell configuration mistakes apart from data
problems.
"""


class RouteClusterError(Exception):
    """Base class for all errors raised by this package."""


class TrackFormatError(RouteClusterError):
    """Input file is structurally unreadable (bad header, unknown format)."""


class EmptyInputError(RouteClusterError):
    """No valid rows survived parsing."""


class EmptyQueryError(RouteClusterError):
    """A query matched no flights."""


class MissingAirportError(RouteClusterError):
    """Airport code absent from the airport table."""

    def __init__(self, code: str):
        super().__init__(f"unknown airport code {code!r}")
        self.code = code


class InsufficientPointsError(RouteClusterError):
    """A track has too few points for the requested operation."""


class DegenerateTrackError(RouteClusterError):
    """Every direction-vector pair was skipped; no similarity is defined."""


class UndefinedSilhouetteError(RouteClusterError):
    """Silhouette requested for k < 2 or k > n - 1."""


class TooFewFlightsError(RouteClusterError):
    """Automatic cut selection needs at least 3 flights."""


class ValidationError(RouteClusterError):
    """A request parameter is out of range or inconsistent."""

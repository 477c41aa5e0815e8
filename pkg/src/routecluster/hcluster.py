"""Agglomerative hierarchical clustering over a distance matrix.

The full merge tree (dendrogram) is always built; clusterings are then
obtained by cutting it, either at a distance threshold (the
human-in-the-loop mode) or at a target cluster count. Building once and
cutting many times is what makes interactive threshold exploration cheap:
a re-cut never recomputes distances.

Complexity: the merge loop scans the active pair set each step, O(n^3)
overall with Lance-Williams O(n) matrix updates per merge. At the
hundreds-of-flights scale a query returns, this is far below the cost of
building the distance matrix itself.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .errors import ValidationError
from .metrics import DistanceMatrix


class Linkage(enum.Enum):
    AVERAGE = "average"
    COMPLETE = "complete"
    SINGLE = "single"

    @classmethod
    def parse(cls, name: str) -> "Linkage":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValidationError(f"unknown linkage {name!r}") from None


@dataclass(frozen=True)
class Dendrogram:
    """Merge tree: leaves 0..n-1, internal nodes n..2n-2 in merge order.

    merges[s] = (left, right, height) creates node n_leaves + s. Heights
    are non-decreasing in merge order.
    """

    n_leaves: int
    leaf_ids: tuple[str, ...]
    merges: tuple[tuple[int, int, float], ...]

    @property
    def root_height(self) -> float:
        return self.merges[-1][2] if self.merges else 0.0

    def to_json_dict(self) -> dict:
        return {
            "n_leaves": self.n_leaves,
            "merges": [[left, right, height] for left, right, height in self.merges],
        }


@dataclass(frozen=True)
class Clustering:
    """Flight -> cluster assignment with contiguous 0-based indices.

    Cluster indices follow first appearance in flight order, so the same
    partition always numbers its clusters the same way.
    """

    flight_ids: tuple[str, ...]
    assignments: tuple[int, ...]
    source: str

    @property
    def k(self) -> int:
        return max(self.assignments) + 1

    @property
    def labels(self) -> dict[str, int]:
        return dict(zip(self.flight_ids, self.assignments))

    def members(self) -> list[list[str]]:
        out: list[list[str]] = [[] for _ in range(self.k)]
        for fid, c in zip(self.flight_ids, self.assignments):
            out[c].append(fid)
        return out


def build_dendrogram(matrix: DistanceMatrix, linkage: Linkage = Linkage.AVERAGE) -> Dendrogram:
    """Merge the two closest clusters until one remains.

    Cluster-to-cluster distance follows the chosen linkage via the
    Lance-Williams update. Ties break on the lexicographically smallest
    (min node id, max node id) pair, which makes the merge order, and
    therefore every downstream cut, deterministic. Recorded heights are
    clamped to be non-decreasing (the average-linkage update can round a
    hair below the previous height).
    """
    n = matrix.n
    if n == 1:
        return Dendrogram(n_leaves=1, leaf_ids=matrix.labels, merges=())

    size = 2 * n - 1
    dist = np.full((size, size), np.inf)
    dist[:n, :n] = matrix.d
    sizes = np.ones(size, dtype=np.int64)
    active = list(range(n))
    merges = []
    last_height = 0.0

    for step in range(n - 1):
        act = np.array(active)
        sub = dist[np.ix_(act, act)].copy()
        sub[np.tril_indices(len(act))] = np.inf
        flat = int(np.argmin(sub))
        r, c = divmod(flat, len(act))
        left, right = int(act[r]), int(act[c])

        height = max(float(dist[left, right]), last_height)
        last_height = height
        new = n + step
        merges.append((left, right, height))

        others = [a for a in active if a != left and a != right]
        if others:
            oth = np.array(others)
            if linkage is Linkage.AVERAGE:
                si, sj = sizes[left], sizes[right]
                updated = (si * dist[left, oth] + sj * dist[right, oth]) / (si + sj)
            elif linkage is Linkage.COMPLETE:
                updated = np.maximum(dist[left, oth], dist[right, oth])
            else:
                updated = np.minimum(dist[left, oth], dist[right, oth])
            dist[new, oth] = updated
            dist[oth, new] = updated
        sizes[new] = sizes[left] + sizes[right]
        active = [a for a in active if a != left and a != right] + [new]
        active.sort()

    return Dendrogram(n_leaves=n, leaf_ids=matrix.labels, merges=tuple(merges))


def _assign(dendrogram: Dendrogram, applied: int, source: str) -> Clustering:
    """Clustering from the first `applied` merges, numbered by first appearance."""
    n = dendrogram.n_leaves
    members: dict[int, list[int]] = {i: [i] for i in range(n)}
    for step in range(applied):
        left, right, _ = dendrogram.merges[step]
        members[n + step] = members.pop(left) + members.pop(right)

    root_of = {}
    for node, leaves in members.items():
        for leaf in leaves:
            root_of[leaf] = node

    assignment = [0] * n
    index_of: dict[int, int] = {}
    for leaf in range(n):
        root = root_of[leaf]
        if root not in index_of:
            index_of[root] = len(index_of)
        assignment[leaf] = index_of[root]
    return Clustering(flight_ids=dendrogram.leaf_ids, assignments=tuple(assignment), source=source)


def cut_threshold(dendrogram: Dendrogram, t: float) -> Clustering:
    """Apply every merge with height strictly below t.

    Strictness matters: a threshold equal to a merge height leaves that
    merge unapplied, so lowering the threshold onto a height splits the
    corresponding cluster.
    """
    if t < 0:
        raise ValidationError(f"threshold must be >= 0, got {t}")
    applied = 0
    for _, _, height in dendrogram.merges:
        if height < t:
            applied += 1
        else:
            break  # heights are non-decreasing
    return _assign(dendrogram, applied, source=f"threshold({t})")


def cut_k(dendrogram: Dendrogram, k: int) -> Clustering:
    """Undo the last k - 1 merges, leaving exactly k clusters."""
    n = dendrogram.n_leaves
    if not 1 <= k <= n:
        raise ValidationError(f"k must be in [1, {n}], got {k}")
    return _assign(dendrogram, n - k, source=f"k-cut({k})")


def with_source(clustering: Clustering, source: str) -> Clustering:
    return replace(clustering, source=source)

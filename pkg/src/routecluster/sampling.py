"""Point extraction and index-proportional pairing of unequal-length tracks.

Extraction keeps one point out of every n ("extraction factor") and always
retains the final point so arrival geometry survives aggressive
downsampling. Pairing maps two extracted sequences onto min(len_a, len_b)
aligned pairs so the pairwise metrics are defined for unequal lengths.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

from .errors import ValidationError

T = TypeVar("T")


def extract(points: Sequence[T], n: int) -> list[T]:
    """Keep every n-th element (indices 0, n, 2n, ...) plus the last.

    n = 1 returns a copy of the input. Output order matches input order;
    the final element is appended when the stride misses it.
    """
    if n < 1:
        raise ValidationError(f"extraction factor must be >= 1, got {n}")
    if not points:
        raise ValidationError("cannot extract from an empty sequence")
    kept = list(points[::n])
    if (len(points) - 1) % n != 0:
        kept.append(points[-1])
    return kept


def pair_indices(len_a: int, len_b: int) -> list[tuple[int, int]]:
    """Index-proportional pairing of two sequences.

    k = min(len_a, len_b) pairs; pair i maps to (floor(i*len_a/k),
    floor(i*len_b/k)). Equal lengths reduce to plain index-by-index
    pairing. Both index maps are monotone non-decreasing and every index
    of the shorter sequence is used exactly once.
    """
    if len_a < 1 or len_b < 1:
        raise ValidationError("pairing requires non-empty sequences")
    k = min(len_a, len_b)
    return [(i * len_a // k, i * len_b // k) for i in range(k)]


def pair_tracks(a: Sequence[T], b: Sequence[T]) -> list[tuple[T, T]]:
    """Pair two extracted sequences element-wise via pair_indices.

    Swap-consistent: pair_tracks(b, a) yields the same pairs with the
    components swapped, which keeps both distance metrics symmetric.
    """
    return [(a[ia], b[ib]) for ia, ib in pair_indices(len(a), len(b))]

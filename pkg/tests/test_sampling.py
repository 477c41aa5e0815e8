import math

import pytest
from hypothesis import given, strategies as st

from routecluster.errors import ValidationError
from routecluster.sampling import extract, pair_indices, pair_tracks


class TestExtract:
    def test_n1_is_identity(self):
        xs = list(range(17))
        assert extract(xs, 1) == xs

    def test_ten_points_n4(self):
        assert extract(list(range(10)), 4) == [0, 4, 8, 9]

    def test_three_points_n16(self):
        assert extract([10, 20, 30], 16) == [10, 30]

    def test_empty_is_error(self):
        with pytest.raises(ValidationError):
            extract([], 2)

    def test_bad_factor_is_error(self):
        with pytest.raises(ValidationError):
            extract([1], 0)

    @given(st.lists(st.integers(), min_size=1, max_size=300), st.integers(min_value=1, max_value=40))
    def test_length_bounds(self, xs, n):
        out = extract(xs, n)
        base = math.ceil(len(xs) / n)
        assert base <= len(out) <= min(base + 1, len(xs))

    @given(st.integers(min_value=1, max_value=300), st.integers(min_value=1, max_value=40))
    def test_order_preserving_and_endpoints(self, size, n):
        xs = list(range(size))
        out = extract(xs, n)
        assert out == sorted(set(out))
        assert out[0] == 0 and out[-1] == size - 1


class TestPairing:
    def test_equal_lengths_index_pairing(self):
        a = list("abcde")
        b = list("vwxyz")
        assert pair_tracks(a, b) == list(zip(a, b))

    def test_six_versus_three(self):
        assert pair_indices(6, 3) == [(0, 0), (2, 1), (4, 2)]

    def test_self_pairing(self):
        a = [1, 2, 3, 4]
        assert pair_tracks(a, a) == [(x, x) for x in a]

    @given(st.integers(min_value=2, max_value=200), st.integers(min_value=2, max_value=200))
    def test_monotone_and_covers_shorter_track(self, la, lb):
        idx = pair_indices(la, lb)
        ia = [p[0] for p in idx]
        ib = [p[1] for p in idx]
        assert ia == sorted(ia) and ib == sorted(ib)
        assert all(0 <= i < la for i in ia) and all(0 <= j < lb for j in ib)
        shorter = ia if la <= lb else ib
        assert shorter == list(range(min(la, lb)))

    @given(st.integers(min_value=1, max_value=50), st.integers(min_value=1, max_value=50))
    def test_swap_consistency(self, la, lb):
        a = [("a", i) for i in range(la)]
        b = [("b", i) for i in range(lb)]
        assert pair_tracks(b, a) == [(y, x) for x, y in pair_tracks(a, b)]

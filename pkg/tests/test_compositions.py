"""Enumeration order, counts, and the coordinate-difference bound."""

import itertools

import pytest

from bhset.compositions import (
    count_compositions,
    diff_inf_norm,
    enumerate_compositions,
)
from bhset.errors import CountOverflowError, DimensionMismatchError


def test_enumeration_small_cases():
    assert list(enumerate_compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(enumerate_compositions(1, 3)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_enumeration_h2_n3_matches_brute_force():
    # Independent oracle: filter the full integer cube by the sum condition.
    brute = sorted(
        (x for x in itertools.product(range(3), repeat=3) if sum(x) == 2),
        reverse=True,
    )
    assert list(enumerate_compositions(2, 3)) == brute
    assert list(enumerate_compositions(2, 3)) == [
        (2, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (0, 2, 0),
        (0, 1, 1),
        (0, 0, 2),
    ]


def test_count_values():
    assert count_compositions(2, 3) == 6
    assert count_compositions(1, 5) == 5
    assert count_compositions(3, 2) == 4


def test_count_overflow_guard():
    with pytest.raises(CountOverflowError):
        count_compositions(500, 40)


@pytest.mark.parametrize("h", range(1, 7))
@pytest.mark.parametrize("n", range(1, 9))
def test_stream_length_matches_count(h, n):
    assert sum(1 for _ in enumerate_compositions(h, n)) == count_compositions(h, n)


@pytest.mark.parametrize("h,n", [(1, 1), (3, 4), (5, 3), (2, 6)])
def test_yielded_compositions_satisfy_invariants(h, n):
    seen = set()
    for comp in enumerate_compositions(h, n):
        assert len(comp) == n
        assert sum(comp) == h
        assert all(0 <= p <= h for p in comp)
        seen.add(comp)
    assert len(seen) == count_compositions(h, n)


def test_enumeration_is_reverse_lexicographic():
    for h, n in [(2, 3), (4, 4), (3, 5)]:
        comps = list(enumerate_compositions(h, n))
        assert comps == sorted(comps, reverse=True)
        assert comps[0] == (h,) + (0,) * (n - 1)
        assert comps[-1] == (0,) * (n - 1) + (h,)


def test_diff_inf_norm_examples():
    assert diff_inf_norm((2, 0, 0), (0, 2, 0)) == 2
    assert diff_inf_norm((1, 0, 1), (1, 0, 1)) == 0
    assert diff_inf_norm((1, 1, 0), (0, 1, 1)) == 1


def test_diff_inf_norm_rejects_mismatched_shapes():
    with pytest.raises(DimensionMismatchError):
        diff_inf_norm((2, 0), (1, 0, 1))
    with pytest.raises(DimensionMismatchError):
        diff_inf_norm((2, 0), (1, 0))


@pytest.mark.parametrize("h,n", [(1, 2), (2, 3), (3, 3), (4, 2)])
def test_pairwise_difference_bounded_by_h(h, n):
    comps = list(enumerate_compositions(h, n))
    for x in comps:
        for y in comps:
            d = diff_inf_norm(x, y)
            assert 0 <= d <= h
            assert (d == 0) == (x == y)


def test_bad_shapes_rejected():
    with pytest.raises(ValueError):
        count_compositions(0, 3)
    with pytest.raises(ValueError):
        count_compositions(2, 0)
    with pytest.raises(ValueError):
        list(enumerate_compositions(-1, 3))

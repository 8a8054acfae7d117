"""Weak compositions of h into n parts, the index set of every h-fold sum."""

from __future__ import annotations

from math import comb
from typing import Iterator

from .errors import CountOverflowError, DimensionMismatchError

Composition = tuple[int, ...]

_COUNT_LIMIT = 2**63  # enumeration counts must fit a signed 64-bit integer


def count_compositions(h: int, n: int) -> int:
    """Number of weak compositions of h into n parts: C(h+n-1, n-1)."""
    _check_shape(h, n)
    c = comb(h + n - 1, n - 1)
    if c >= _COUNT_LIMIT:
        raise CountOverflowError(f"C({h + n - 1},{n - 1}) = {c} exceeds 64-bit range")
    return c


def enumerate_compositions(h: int, n: int) -> Iterator[Composition]:
    """Yield every composition exactly once, in reverse-lexicographic order.

    The stream starts at (h, 0, ..., 0), ends at (0, ..., 0, h), and its
    length equals count_compositions(h, n).  Each yielded tuple is a fresh
    immutable value, safe to retain.
    """
    count_compositions(h, n)  # validates the shape and the 64-bit bound
    parts = [0] * n
    parts[0] = h
    while True:
        yield tuple(parts)
        # Successor: decrement the last nonzero among the first n-1 parts and
        # move everything to its right (plus one unit) into the next slot.
        k = n - 2
        while k >= 0 and parts[k] == 0:
            k -= 1
        if k < 0:
            return
        trailing = sum(parts[k + 1 :])
        parts[k] -= 1
        parts[k + 1] = trailing + 1
        for i in range(k + 2, n):
            parts[i] = 0


def diff_inf_norm(x: Composition, y: Composition) -> int:
    """max_i |x_i - y_i| for two compositions of the same (h, n).

    Always lies in [0, h]; zero exactly when x == y.
    """
    if len(x) != len(y) or sum(x) != sum(y):
        raise DimensionMismatchError(
            f"compositions disagree in shape: {x} vs {y}"
        )
    return max(abs(a - b) for a, b in zip(x, y))


def _check_shape(h: int, n: int):
    if h < 1:
        raise ValueError(f"fold count must be >= 1, got {h}")
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")

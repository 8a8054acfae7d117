"""Brute-force reference path for differential testing.

Deliberately shares nothing with the production kernels: sums are built from
nondecreasing index multisets (not composition dot products), grouping is a
pairwise linear scan (not a sort), and the margin is an all-pairs minimum.
Slow on purpose; guarded by an instance budget.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from .compositions import Composition, count_compositions
from .errors import BudgetExceededError, DegenerateVectorError, NotBhVectorError
from .scalars import GAUSSIAN, RATIONAL, GaussianRational, Magnitude, mag_compare
from .sumset import ProfileEntry, RepresentationProfile
from .vectors import Vector

DEFAULT_BUDGET = 10**5


def multiset_to_composition(indices: tuple[int, ...], n: int) -> Composition:
    """Count how often each coordinate index occurs in the multiset."""
    parts = [0] * n
    for i in indices:
        parts[i] += 1
    return tuple(parts)


def composition_to_multiset(comp: Composition) -> tuple[int, ...]:
    """Expand a composition into its nondecreasing index multiset."""
    out = []
    for i, c in enumerate(comp):
        out.extend([i] * c)
    return tuple(out)


def oracle_profile(a: Vector, h: int, budget: int = DEFAULT_BUDGET) -> RepresentationProfile:
    """Profile built the slow, independent way.

    Entries come out value-sorted with canonically ordered reps so they
    compare equal to the production profile whenever both are correct.
    """
    if h < 1:
        raise ValueError(f"fold count must be >= 1, got {h}")
    if count_compositions(h, a.n) > budget:
        raise BudgetExceededError(f"instance exceeds the oracle budget of {budget}")
    groups: list[tuple[object, list[Composition]]] = []
    for indices in combinations_with_replacement(range(a.n), h):
        value = _direct_sum(a, indices)
        for existing, members in groups:
            if existing == value:
                members.append(multiset_to_composition(indices, a.n))
                break
        else:
            groups.append((value, [multiset_to_composition(indices, a.n)]))
    groups.sort(key=lambda kv: _value_key(kv[0], a.backend))
    entries = tuple(
        ProfileEntry(value, tuple(sorted(members, reverse=True)))
        for value, members in groups
    )
    return RepresentationProfile(h, a.n, a.backend, 0.0, entries)


def oracle_margin(a: Vector, h: int, budget: int = DEFAULT_BUDGET) -> Magnitude:
    """All-pairs minimum gap, no sorting shortcut."""
    if count_compositions(h, a.n) > budget:
        raise BudgetExceededError(f"instance exceeds the oracle budget of {budget}")
    sums = [
        _direct_sum(a, indices)
        for indices in combinations_with_replacement(range(a.n), h)
    ]
    if len(sums) < 2:
        raise DegenerateVectorError("margin needs at least two sums")
    best = None
    for i in range(len(sums)):
        for j in range(i + 1, len(sums)):
            diff = sums[i] - sums[j]
            if not diff:
                raise NotBhVectorError("colliding sums; the margin would be zero")
            if best is None or mag_compare(diff, best) < 0:
                best = diff
    if a.backend == GAUSSIAN:
        return Magnitude(best.mag_sq(), True, GAUSSIAN)
    if a.backend == RATIONAL:
        return Magnitude(abs(Fraction(best)), False, RATIONAL)
    return Magnitude(abs(best), False, a.backend)


def _direct_sum(a: Vector, indices: tuple[int, ...]):
    if a.backend == GAUSSIAN:
        total = GaussianRational(0, 0)
    elif a.backend == RATIONAL:
        total = Fraction(0)
    else:
        total = 0.0
    for i in indices:
        total = total + a.coords[i]
    return total


def _value_key(value, backend):
    if backend == GAUSSIAN:
        return value.sort_key()
    return value

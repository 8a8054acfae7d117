"""Dot products, h-fold sumsets, and full representation profiles.

The kernels clear denominators once per vector and work on machine-friendly
integers (or integer pairs for gaussians): grouping and gap scans then cost a
sort instead of quadratic exact comparisons, and every result maps back to
the exact value by a single division by the common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .compositions import Composition, count_compositions, enumerate_compositions
from .errors import BackendMismatchError, DimensionMismatchError
from .scalars import FLOAT, GAUSSIAN, RATIONAL, GaussianRational, Scalar
from .vectors import Vector


@dataclass(frozen=True)
class ProfileEntry:
    """One distinct sum value and every composition that produces it."""

    value: Scalar
    reps: tuple[Composition, ...]


@dataclass(frozen=True)
class RepresentationProfile:
    """Grouping of all of X_{h,n} by the sum each composition produces.

    Entries are in canonical value order (ascending rationals, (re, im)
    lexicographic for gaussians); each entry's reps are in enumeration order.
    The entry multiplicities always total C(h+n-1, n-1).
    """

    h: int
    n: int
    backend: str
    tolerance: float
    entries: tuple[ProfileEntry, ...]

    def total_multiplicity(self) -> int:
        return sum(len(e.reps) for e in self.entries)

    def sums(self) -> tuple[Scalar, ...]:
        """The distinct sums, i.e. the h-fold sumset in canonical order."""
        return tuple(e.value for e in self.entries)


def dot(x: Composition, a: Vector) -> Scalar:
    """Weighted sum of the vector's coordinates with composition weights."""
    if len(x) != a.n:
        raise DimensionMismatchError(f"composition length {len(x)} vs vector length {a.n}")
    if a.backend == GAUSSIAN:
        re = Fraction(0)
        im = Fraction(0)
        for w, c in zip(x, a.coords):
            if w:
                re += w * c.re
                im += w * c.im
        return GaussianRational(re, im)
    total = Fraction(0) if a.backend == RATIONAL else 0.0
    for w, c in zip(x, a.coords):
        if w:
            total += w * c
    return total


def build_profile(a: Vector, h: int, tolerance: float = 0.0) -> RepresentationProfile:
    """Group all compositions of h into a.n parts by equal dot product.

    Exact backends group by exact equality and require tolerance 0.  The
    float backend clusters sorted sums by single linkage: consecutive sums
    within ``tolerance`` chain into one entry, whose representative value is
    the smallest member.
    """
    _check_tolerance(a, tolerance)
    comps = composition_list(h, a.n)
    keys, scale = sum_keys(a, h)
    order = sorted(range(len(keys)), key=keys.__getitem__)
    groups: list[list[int]] = []
    if a.backend == FLOAT:
        prev = None
        for idx in order:
            if prev is not None and keys[idx] - prev <= tolerance:
                groups[-1].append(idx)
            else:
                groups.append([idx])
            prev = keys[idx]
    else:
        prev = None
        for idx in order:
            if prev is not None and keys[idx] == prev:
                groups[-1].append(idx)
            else:
                groups.append([idx])
            prev = keys[idx]
    entries = []
    for members in groups:
        # Groups were built in value order, so the head is the smallest sum;
        # capture it before re-sorting the members into enumeration order.
        rep_key = keys[members[0]]
        members.sort()
        value = _unscale(rep_key, scale, a.backend)
        entries.append(ProfileEntry(value, tuple(comps[i] for i in members)))
    return RepresentationProfile(h, a.n, a.backend, float(tolerance), tuple(entries))


def g_max(profile: RepresentationProfile) -> int:
    """Largest entry multiplicity; 1 exactly when all sums are distinct."""
    return max(len(e.reps) for e in profile.entries)


@lru_cache(maxsize=32)
def composition_list(h: int, n: int) -> tuple[Composition, ...]:
    """All compositions in canonical order, cached per (h, n)."""
    return tuple(enumerate_compositions(h, n))


def scaled_int_coords(a: Vector):
    """Clear denominators: integer coordinates plus the common scale L.

    Rational vectors become (ints, L); gaussian vectors become
    ((re_int, im_int) pairs, L); float vectors pass through with scale 1.
    """
    if a.backend == RATIONAL:
        scale = lcm(*(c.denominator for c in a.coords))
        return [int(c * scale) for c in a.coords], scale
    if a.backend == GAUSSIAN:
        scale = lcm(*(d for c in a.coords for d in (c.re.denominator, c.im.denominator)))
        return [(int(c.re * scale), int(c.im * scale)) for c in a.coords], scale
    return list(a.coords), 1


def sum_keys(a: Vector, h: int):
    """Sum of each composition in enumeration order, as sortable scaled keys.

    Keys are ints (rational), int pairs (gaussian), or floats; dividing by
    the returned scale recovers the exact sums.
    """
    ints, scale = scaled_int_coords(a)
    comps = composition_list(h, a.n)
    if a.backend == GAUSSIAN:
        keys = []
        for x in comps:
            re = 0
            im = 0
            for w, (cr, ci) in zip(x, ints):
                if w:
                    re += w * cr
                    im += w * ci
            keys.append((re, im))
        return keys, scale
    keys = []
    zero = 0 if a.backend == RATIONAL else 0.0
    for x in comps:
        s = zero
        for w, c in zip(x, ints):
            if w:
                s += w * c
        keys.append(s)
    return keys, scale


def _unscale(key, scale: int, backend: str) -> Scalar:
    if backend == RATIONAL:
        return Fraction(key, scale)
    if backend == GAUSSIAN:
        return GaussianRational(Fraction(key[0], scale), Fraction(key[1], scale))
    return key


def _check_tolerance(a: Vector, tolerance: float):
    if tolerance < 0:
        raise ValueError(f"tolerance must be >= 0, got {tolerance}")
    if tolerance != 0 and a.backend != FLOAT:
        raise BackendMismatchError(
            f"tolerance {tolerance} is only meaningful for the float backend"
        )


def sums_of(a: Vector, h: int) -> Sequence[Scalar]:
    """Exact sums in enumeration order (convenience over sum_keys)."""
    keys, scale = sum_keys(a, h)
    return [_unscale(k, scale, a.backend) for k in keys]

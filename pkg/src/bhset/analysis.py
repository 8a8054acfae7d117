"""B_h verdicts, separation margins, and openness-radius certificates.

The separation margin of a verified vector is the smallest magnitude of a
difference of two distinct h-fold sums.  Any perturbation whose sup-norm
stays strictly below margin/h cannot create a collision (each composition
pair differs by at most h per coordinate), so (margin, margin/h) certifies
an open ball of vectors with the same property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .compositions import Composition
from .errors import (
    BackendMismatchError,
    DegenerateVectorError,
    NotBhVectorError,
)
from .scalars import FLOAT, GAUSSIAN, RATIONAL, Magnitude
from .sumset import composition_list, sum_keys
from .vectors import Vector, first_repeated_pair

_BRUTE_FORCE_CUTOFF = 64  # below this, closest-pair scans all pairs exactly


@dataclass(frozen=True)
class BhVerdict:
    """Outcome of the membership check.

    A positive verdict means the coordinates are pairwise distinct and every
    sum value is hit by exactly one composition.  A negative verdict carries
    the first colliding composition pair in canonical order, which any caller
    can re-verify with a pair of dot products.
    """

    is_bh: bool
    has_distinct_coords: bool
    collision_witness: Optional[tuple[Composition, Composition]]


@dataclass(frozen=True)
class BhCertificate:
    """Separation margin plus the openness radius margin/h it certifies.

    Soundness contract: every vector within sup-norm distance strictly less
    than ``radius`` of ``vector`` has the same membership property.  Both
    magnitudes are squared for the gaussian backend.
    """

    delta: Magnitude
    radius: Magnitude
    h: int
    n: int
    vector: Vector


@dataclass(frozen=True)
class UVPartition:
    """Distinct composition pairs split by whether their sums differ.

    ``delta_u`` is the smallest magnitude over the separated pairs;
    ``v_pairs`` lists every colliding pair (first element canonically before
    the second).  ``v_pairs`` is empty exactly for vectors with the full
    property; ``u_nonempty`` is always true (degenerate inputs raise).
    """

    delta_u: Magnitude
    v_pairs: tuple[tuple[Composition, Composition], ...]
    u_nonempty: bool


def is_bh(a: Vector, h: int, tolerance: float = 0.0) -> BhVerdict:
    """Decide whether every sum of h coordinates has a unique representation.

    Exact backends decide exactly (tolerance must be 0); the float backend
    treats values within ``tolerance`` as equal, for both coordinate
    distinctness and sum collisions.
    """
    if h < 1:
        raise ValueError(f"fold count must be >= 1, got {h}")
    if tolerance != 0 and a.backend != FLOAT:
        raise BackendMismatchError("tolerance requires the float backend")
    dup = first_repeated_pair(a, tolerance)
    if dup is not None:
        i, j = dup
        x = tuple(h if k == i else 0 for k in range(a.n))
        y = tuple(h if k == j else 0 for k in range(a.n))
        return BhVerdict(False, False, (x, y))
    witness = _first_collision(a, h, tolerance)
    if witness is None:
        return BhVerdict(True, True, None)
    return BhVerdict(False, True, witness)


def _first_collision(a, h, tolerance):
    """Colliding pair minimizing (rank of first, rank of second), or None."""
    keys, _ = sum_keys(a, h)
    order = sorted(range(len(keys)), key=keys.__getitem__)
    comps = composition_list(h, a.n)
    best = None
    group_start = 0
    for pos in range(1, len(order) + 1):
        boundary = pos == len(order) or not _keys_close(
            keys[order[pos]], keys[order[pos - 1]], a.backend, tolerance
        )
        if boundary:
            if pos - group_start >= 2:
                members = sorted(order[group_start:pos])
                cand = (members[0], members[1])
                if best is None or cand < best:
                    best = cand
            group_start = pos
    if best is None:
        return None
    return (comps[best[0]], comps[best[1]])


def _keys_close(k1, k2, backend, tolerance):
    if backend == FLOAT:
        return abs(k1 - k2) <= tolerance
    return k1 == k2


def margin(a: Vector, h: int) -> Magnitude:
    """Smallest |difference| over all distinct pairs of h-fold sums.

    Requires an exact backend and a vector that actually has the property
    (otherwise the margin would be zero).  Real sums sort once and the
    minimum is an adjacent gap; gaussian sums run an exact closest-pair in
    the plane and the result is squared.
    """
    keys, scale = _margin_keys(a, h)
    if a.backend == GAUSSIAN:
        d2 = _closest_pair_sq(keys)
        return Magnitude(Fraction(d2, scale * scale), True, GAUSSIAN)
    gap = min(b - a_ for a_, b in zip(keys, keys[1:]))
    return Magnitude(Fraction(gap, scale), False, RATIONAL)


def _margin_keys(a, h):
    """Sorted scaled keys for margin, validating the preconditions."""
    if a.backend == FLOAT:
        raise BackendMismatchError("margin requires an exact backend")
    if h < 1:
        raise ValueError(f"fold count must be >= 1, got {h}")
    keys, scale = sum_keys(a, h)
    if len(keys) < 2:
        raise DegenerateVectorError(
            "margin needs at least two compositions (n >= 2)"
        )
    keys = sorted(keys)
    for prev, cur in zip(keys, keys[1:]):
        if prev == cur:
            raise NotBhVectorError(
                "vector has colliding sums; the margin would be zero"
            )
    return keys, scale


def certify(a: Vector, h: int) -> BhCertificate:
    """Issue the (margin, margin/h) openness certificate for a verified vector."""
    delta = margin(a, h)
    return BhCertificate(delta, delta.divided_by(h), h, a.n, a)


def uv_partition(a: Vector, h: int) -> UVPartition:
    """Split distinct composition pairs into separated and colliding ones.

    ``delta_u`` is the minimum magnitude over pairs whose sums differ; every
    colliding pair is listed.  Raises for fully degenerate vectors (all sums
    equal, i.e. all coordinates equal), where no separated pair exists.
    """
    if a.backend == FLOAT:
        raise BackendMismatchError("uv_partition requires an exact backend")
    if a.n < 2:
        raise DegenerateVectorError("uv_partition needs n >= 2")
    if h < 1:
        raise ValueError(f"fold count must be >= 1, got {h}")
    keys, scale = sum_keys(a, h)
    comps = composition_list(h, a.n)
    order = sorted(range(len(keys)), key=keys.__getitem__)
    groups: list[list[int]] = []
    prev = None
    for idx in order:
        if prev is not None and keys[idx] == prev:
            groups[-1].append(idx)
        else:
            groups.append([idx])
        prev = keys[idx]
    if len(groups) < 2:
        raise DegenerateVectorError(
            "all sums coincide (all coordinates equal); no separated pair exists"
        )
    distinct = [keys[g[0]] for g in groups]
    v_pairs = []
    for members in groups:
        if len(members) >= 2:
            members.sort()
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    v_pairs.append((comps[members[i]], comps[members[j]]))
    if a.backend == GAUSSIAN:
        d2 = _closest_pair_sq(distinct)  # group keys are already sorted
        delta_u = Magnitude(Fraction(d2, scale * scale), True, GAUSSIAN)
    else:
        gap = min(b - a_ for a_, b in zip(distinct, distinct[1:]))
        delta_u = Magnitude(Fraction(gap, scale), False, RATIONAL)
    return UVPartition(delta_u, tuple(v_pairs), True)


def _closest_pair_sq(points) -> int:
    """Exact squared distance of the closest pair of distinct integer points.

    Divide-and-conquer on x with an O(m^2) scan below the cutoff; every
    comparison is integer arithmetic, so the result is exact.  ``points``
    must be sorted and pairwise distinct.
    """
    m = len(points)
    if m < 2:
        raise DegenerateVectorError("closest pair needs at least two points")
    if m <= _BRUTE_FORCE_CUTOFF:
        best = None
        for i in range(m):
            xi, yi = points[i]
            for j in range(i + 1, m):
                d = (points[j][0] - xi) ** 2 + (points[j][1] - yi) ** 2
                if best is None or d < best:
                    best = d
        return best
    mid = m // 2
    mid_x = points[mid][0]
    best = min(_closest_pair_sq(points[:mid]), _closest_pair_sq(points[mid:]))
    strip = [p for p in points if (p[0] - mid_x) ** 2 < best]
    strip.sort(key=lambda p: p[1])
    for i in range(len(strip)):
        xi, yi = strip[i]
        for j in range(i + 1, len(strip)):
            dy = strip[j][1] - yi
            if dy * dy >= best:
                break
            d = (strip[j][0] - xi) ** 2 + dy * dy
            if d < best:
                best = d
    return best

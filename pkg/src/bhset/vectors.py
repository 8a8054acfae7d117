"""Vectors over one scalar backend, with the norms the certificates use."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import BackendMismatchError, DimensionMismatchError
from .scalars import (
    FLOAT,
    GAUSSIAN,
    RATIONAL,
    GaussianRational,
    Magnitude,
    Scalar,
    backend_of,
    check_backend,
    magnitude,
    scale_by_rational,
)


@dataclass(frozen=True)
class Vector:
    """Immutable point of K^n; all coordinates share one backend.

    Coordinate distinctness is deliberately not an invariant: the analysis
    and repair layers must accept vectors whose coordinates repeat.
    """

    coords: tuple[Scalar, ...]
    backend: str

    def __post_init__(self):
        check_backend(self.backend)
        if not self.coords:
            raise DimensionMismatchError("vector needs at least one coordinate")
        for c in self.coords:
            if backend_of(c) != self.backend:
                raise BackendMismatchError(
                    f"coordinate {c!r} is not a {self.backend} scalar"
                )

    @property
    def n(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        _check_compatible(self, other)
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.backend)

    def __sub__(self, other: "Vector") -> "Vector":
        _check_compatible(self, other)
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.backend)

    def scale(self, factor) -> "Vector":
        """Coordinate-wise multiplication by an exact rational factor."""
        return Vector(
            tuple(scale_by_rational(c, factor) for c in self.coords), self.backend
        )

    def inf_norm(self) -> Magnitude:
        """max |coordinate|, in the backend's canonical magnitude form."""
        best = magnitude(self.coords[0])
        for c in self.coords[1:]:
            m = magnitude(c)
            if m > best:
                best = m
        return best


def _check_compatible(u: Vector, v: Vector):
    if u.backend != v.backend:
        raise BackendMismatchError(f"mixed backends {u.backend!r} and {v.backend!r}")
    if u.n != v.n:
        raise DimensionMismatchError(f"length mismatch: {u.n} vs {v.n}")


def make_vector(values: Iterable, backend: str) -> Vector:
    """Build a Vector, coercing ints/Fractions into the requested backend."""
    check_backend(backend)
    coords = []
    for v in values:
        if backend == RATIONAL:
            coords.append(Fraction(v) if isinstance(v, (int, Fraction)) else v)
        elif backend == GAUSSIAN:
            if isinstance(v, (int, Fraction)):
                coords.append(GaussianRational(v))
            else:
                coords.append(v)
        else:
            coords.append(float(v) if isinstance(v, (int, float)) else v)
    return Vector(tuple(coords), backend)


def embed(v: Vector, backend: str) -> Vector:
    """Reinterpret a rational vector in another backend (exact embedding)."""
    if v.backend == backend:
        return v
    if v.backend != RATIONAL:
        raise BackendMismatchError(f"cannot embed {v.backend!r} vector into {backend!r}")
    return make_vector(v.coords, backend)


def first_repeated_pair(v: Vector, tolerance: float = 0.0) -> Optional[tuple[int, int]]:
    """First (i, j), i < j, with coordinates equal (within tolerance on floats)."""
    cs = v.coords
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if v.backend == FLOAT:
                if abs(cs[i] - cs[j]) <= tolerance:
                    return (i, j)
            elif cs[i] == cs[j]:
                return (i, j)
    return None

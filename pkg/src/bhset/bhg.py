"""Bounded-multiplicity membership, fold sweeps, and the openness probe.

Membership with a multiplicity cap g generalizes the g = 1 property; whether
the set of such vectors is open is not known, so the probe below only
gathers empirical evidence around a center and never claims a decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .analysis import BhVerdict, is_bh
from .compositions import count_compositions
from .errors import (
    BackendMismatchError,
    BudgetExceededError,
    NotBhVectorError,
    VerificationFailedError,
)
from .rng import CounterRng
from .scalars import FLOAT, GAUSSIAN, GaussianRational
from .sumset import build_profile, g_max
from .vectors import Vector

DEFAULT_SWEEP_BUDGET = 10**6

_DYADIC_DEN = 2**32  # probe offsets are radius * j / 2^32, j in [-2^32, 2^32]


@dataclass(frozen=True)
class GProfile:
    """Multiplicity histogram: how many sum values have exactly m producers."""

    h: int
    g_max: int
    histogram: dict[int, int]


@dataclass(frozen=True)
class ProbeReport:
    """Evidence from sampling around a center; never a proof either way.

    ``frequencies`` maps observed maximal multiplicities to sample counts;
    any sample exceeding the center's cap g is kept as a counterexample
    candidate to local constancy.
    """

    center: Vector
    h: int
    g: int
    samples: int
    radius: Fraction
    seed: int
    frequencies: dict[int, int]
    observed_min: Optional[int]
    observed_max: Optional[int]
    counterexamples: tuple[Vector, ...]


def is_bhg(a: Vector, h: int, g: int, tolerance: float = 0.0) -> bool:
    """True when no sum value is produced by more than g compositions.

    Monotone in g, and implied for every g >= 1 by the exact membership
    property.
    """
    if g < 1:
        raise ValueError(f"multiplicity cap must be >= 1, got {g}")
    return g_max(build_profile(a, h, tolerance)) <= g


def g_profile(a: Vector, h: int, tolerance: float = 0.0) -> GProfile:
    """Histogram of entry multiplicities of the representation profile."""
    profile = build_profile(a, h, tolerance)
    hist: dict[int, int] = {}
    for entry in profile.entries:
        m = len(entry.reps)
        hist[m] = hist.get(m, 0) + 1
    return GProfile(h, max(hist), dict(sorted(hist.items())))


def bh_sweep(
    a: Vector, h_max: int, budget: int = DEFAULT_SWEEP_BUDGET
) -> list[tuple[int, BhVerdict]]:
    """Membership verdicts for every fold count 1..h_max.

    No monotonicity in h is asserted; the verdicts are independent facts.
    The largest instance must fit the enumeration budget.
    """
    if h_max < 1:
        raise ValueError(f"h_max must be >= 1, got {h_max}")
    if count_compositions(h_max, a.n) > budget:
        raise BudgetExceededError(
            f"count({h_max},{a.n}) exceeds the sweep budget of {budget}"
        )
    return [(h, is_bh(a, h)) for h in range(1, h_max + 1)]


def probe_openness(
    a: Vector, h: int, g: int, samples: int, radius, seed: int, profile_fn=None
) -> ProbeReport:
    """Sample the ball around a B_h[g] center and record the multiplicities.

    Coordinates perturb by dyadic rational multiples of the radius (denominator
    2^32), so every verdict stays exact; complex offsets are rejection-sampled
    onto the disk.  Fixed seed and sample count give identical reports.
    ``profile_fn(vector, h)`` may substitute another profile builder, e.g. the
    brute-force reference path.
    """
    if a.backend == FLOAT:
        raise BackendMismatchError("probe requires an exact backend")
    radius = Fraction(radius)
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if samples < 0:
        raise ValueError(f"sample count must be >= 0, got {samples}")
    if profile_fn is None:
        profile_fn = build_profile
    if g_max(profile_fn(a, h)) > g:
        raise NotBhVectorError(
            f"probe center must satisfy the multiplicity cap g={g}"
        )
    rng = CounterRng(seed)
    freq: dict[int, int] = {}
    bad: list[Vector] = []
    for k in range(samples):
        candidate = _perturbed(a, radius, rng, k)
        _check_within(candidate, a, radius)
        gm = g_max(profile_fn(candidate, h))
        freq[gm] = freq.get(gm, 0) + 1
        if gm > g:
            bad.append(candidate)
    return ProbeReport(
        center=a,
        h=h,
        g=g,
        samples=samples,
        radius=radius,
        seed=seed,
        frequencies=dict(sorted(freq.items())),
        observed_min=min(freq) if freq else None,
        observed_max=max(freq) if freq else None,
        counterexamples=tuple(bad),
    )


def dyadic_offset(radius: Fraction, rng: CounterRng, *counters: int) -> Fraction:
    """radius * j / 2^32 with j uniform over [-2^32, 2^32] (closed ball)."""
    j = rng.below(2 * _DYADIC_DEN + 1, *counters) - _DYADIC_DEN
    return radius * Fraction(j, _DYADIC_DEN)


def _perturbed(a: Vector, radius: Fraction, rng: CounterRng, k: int) -> Vector:
    coords = []
    if a.backend == GAUSSIAN:
        for i, c in enumerate(a.coords):
            attempt = 0
            while True:
                jre = rng.below(2 * _DYADIC_DEN + 1, k, i, attempt, 0) - _DYADIC_DEN
                jim = rng.below(2 * _DYADIC_DEN + 1, k, i, attempt, 1) - _DYADIC_DEN
                if jre * jre + jim * jim <= _DYADIC_DEN * _DYADIC_DEN:
                    break
                attempt += 1
            coords.append(
                c
                + GaussianRational(
                    radius * Fraction(jre, _DYADIC_DEN),
                    radius * Fraction(jim, _DYADIC_DEN),
                )
            )
    else:
        for i, c in enumerate(a.coords):
            coords.append(c + dyadic_offset(radius, rng, k, i))
    return Vector(tuple(coords), a.backend)


def _check_within(candidate: Vector, center: Vector, radius: Fraction):
    norm = (candidate - center).inf_norm()
    limit = radius * radius if center.backend == GAUSSIAN else radius
    if norm.value > limit:
        raise VerificationFailedError("sample left the stated ball")  # pragma: no cover

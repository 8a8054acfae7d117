"""Constructive repair: nudge any vector into one with the B_h property.

The construction perturbs along a canonical witness direction, the geometric
vector (1, h+1, (h+1)^2, ...).  Its weighted sums are base-(h+1) numerals
with digits at most h, hence pairwise distinct, so any positive rational
contraction of it keeps collisions apart while a small enough contraction
cannot disturb the sums that already differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .analysis import is_bh, uv_partition
from .errors import BackendMismatchError, VerificationFailedError
from .scalars import (
    FLOAT,
    GAUSSIAN,
    Magnitude,
    rational_sqrt_lower,
)
from .vectors import Vector, embed, make_vector


@dataclass(frozen=True)
class RepairReport:
    """Everything needed to audit one repair.

    The perturbation is always ``scale * witness``; ``scale`` is None when
    the input already had the property and nothing was changed.  ``verified``
    records the belt-and-braces re-check of the output.
    """

    original: Vector
    epsilon: Fraction
    witness: Optional[Vector]
    scale: Optional[Fraction]
    perturbation: Vector
    repaired: Vector
    delta_u: Optional[Magnitude]
    verified: bool


def canonical_witness(h: int, n: int) -> Vector:
    """The geometric vector (1, h+1, ..., (h+1)^(n-1)), always a B_h vector.

    A weighted sum with weights summing to h is the base-(h+1) numeral whose
    digit string is the weight tuple; numerals with digits <= h are unique,
    so no two compositions share a sum.
    """
    if h < 1 or n < 1:
        raise ValueError(f"need h >= 1 and n >= 1, got h={h}, n={n}")
    base = h + 1
    return make_vector([Fraction(base**i) for i in range(n)], "rational")


def contract(w: Vector, scale) -> Vector:
    """Coordinate-wise positive rational scaling; preserves the property."""
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError(f"contraction factor must be positive, got {scale}")
    return w.scale(scale)


def small_bh_vector(h: int, n: int, bound) -> Vector:
    """A vector with the property and sup-norm strictly below ``bound``.

    Contracts the canonical witness by bound / (2 * max coordinate); the
    factor 2 keeps the norm at bound/2, safely inside the strict inequality.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError(f"bound must be positive, got {bound}")
    w = canonical_witness(h, n)
    return contract(w, bound / (2 * _witness_norm(h, n)))


def repair(a: Vector, h: int, epsilon) -> RepairReport:
    """Produce a vector with the property within sup-distance epsilon of ``a``.

    Already-good inputs return unchanged.  Otherwise the perturbation is
    scale * witness with scale chosen so its norm stays strictly below both
    epsilon and delta_u/h, where delta_u is the smallest gap among sums that
    already differ: separated pairs then stay separated (a collision would
    need a shift of at least delta_u, but each pair moves by less), and
    colliding pairs split because the witness sums are pairwise distinct.
    Inputs with all coordinates equal get a preliminary half-budget spread
    first, which by translation already separates everything.

    Exact backends only; the output is re-verified and a failure of that
    re-check (impossible unless the implementation is wrong) raises.
    """
    if a.backend == FLOAT:
        raise BackendMismatchError("repair is exact-only; float vectors are not accepted")
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    verdict = is_bh(a, h)
    if verdict.is_bh:
        zero = make_vector([0] * a.n, "rational")
        return RepairReport(
            original=a,
            epsilon=epsilon,
            witness=None,
            scale=None,
            perturbation=embed(zero, a.backend),
            repaired=a,
            delta_u=None,
            verified=True,
        )
    w = canonical_witness(h, a.n)
    wnorm = _witness_norm(h, a.n)
    scale_total = Fraction(0)
    budget = epsilon
    base = a
    if len(set(a.coords)) == 1:
        # Fully degenerate: no separated pair exists yet.  Spread with half
        # the budget along the witness; the rest of the construction sees a
        # translate of a contracted witness, which is already separated.
        scale_total = (epsilon / 2) / (2 * wnorm)
        base = a + embed(contract(w, scale_total), a.backend)
        budget = epsilon / 2
    delta_u_mag = None
    if not is_bh(base, h).is_bh:
        part = uv_partition(base, h)
        delta_u_mag = part.delta_u
        if a.backend == GAUSSIAN:
            bound_sq = min(budget * budget, part.delta_u.value / (h * h))
            bound = rational_sqrt_lower(bound_sq)
        else:
            bound = min(budget, part.delta_u.value / h)
        scale_total += bound / (2 * wnorm)
    perturbation = embed(contract(w, scale_total), a.backend)
    repaired = a + perturbation
    verified = is_bh(repaired, h).is_bh and _inf_norm_below(perturbation, epsilon)
    if not verified:
        raise VerificationFailedError(
            "repair self-check failed; this indicates a bug, not a math failure"
        )
    return RepairReport(
        original=a,
        epsilon=epsilon,
        witness=w,
        scale=scale_total,
        perturbation=perturbation,
        repaired=repaired,
        delta_u=delta_u_mag,
        verified=True,
    )


def _witness_norm(h: int, n: int) -> Fraction:
    """Sup-norm of the canonical witness: its largest coordinate."""
    return Fraction((h + 1) ** (n - 1))


def _inf_norm_below(v: Vector, bound: Fraction) -> bool:
    norm = v.inf_norm()
    if v.backend == GAUSSIAN:
        return norm.value < bound * bound
    return norm.value < bound

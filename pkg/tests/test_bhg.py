"""Multiplicity caps, fold sweeps, and the sampling probe."""

from fractions import Fraction

import pytest

from bhset.bhg import bh_sweep, g_profile, is_bhg, probe_openness
from bhset.compositions import count_compositions
from bhset.errors import BudgetExceededError, NotBhVectorError
from bhset.scalars import GaussianRational
from bhset.vectors import make_vector


def test_is_bhg_examples():
    a = make_vector([1, 2, 3], "rational")
    assert is_bhg(a, 2, 2)
    assert not is_bhg(a, 2, 1)
    assert is_bhg(make_vector([1, 3, 9], "rational"), 2, 1)


def test_is_bhg_monotone_in_g():
    a = make_vector([1, 2, 3, 4], "rational")
    gp = g_profile(a, 3)
    results = [is_bhg(a, 3, g) for g in range(1, gp.g_max + 3)]
    # Once true, stays true.
    assert results == sorted(results)
    assert results[gp.g_max - 1]
    if gp.g_max > 1:
        assert not results[gp.g_max - 2]


def test_g_profile_examples():
    gp = g_profile(make_vector([1, 2, 3], "rational"), 2)
    assert gp.histogram == {1: 4, 2: 1}
    assert gp.g_max == 2
    gp = g_profile(make_vector([1, 3, 9], "rational"), 2)
    assert gp.histogram == {1: 6}
    assert gp.g_max == 1
    gp = g_profile(make_vector([Fraction(9, 4)], "rational"), 5)
    assert gp.histogram == {1: 1}


def test_membership_implies_every_cap():
    rng_coords = [([1, 3, 9, 27], 2), ([5, 7], 1), ([2, 11, 30], 3)]
    for coords, h in rng_coords:
        a = make_vector(coords, "rational")
        for g in range(1, 4):
            assert is_bhg(a, h, g)


def test_g_profile_mass_identity():
    for coords, h in [([1, 2, 3, 4], 3), ([0, 1, 5], 4), ([2, 2, 7], 2)]:
        a = make_vector(coords, "rational")
        gp = g_profile(a, h)
        assert sum(m * k for m, k in gp.histogram.items()) == count_compositions(h, a.n)


def test_bh_sweep_examples():
    a = make_vector([1, 3, 9], "rational")
    assert [(h, v.is_bh) for h, v in bh_sweep(a, 2)] == [(1, True), (2, True)]
    b = make_vector([1, 2, 3], "rational")
    assert [(h, v.is_bh) for h, v in bh_sweep(b, 2)] == [(1, True), (2, False)]
    c = make_vector([4, 4, 5], "rational")
    assert [(h, v.is_bh) for h, v in bh_sweep(c, 1)] == [(1, False)]


def test_bh_sweep_budget():
    a = make_vector(list(range(30)), "rational")
    with pytest.raises(BudgetExceededError):
        bh_sweep(a, 12, budget=1000)


def test_probe_inside_certificate_radius_sees_no_collisions():
    # Radius 1/2 < margin/h = 1 for this center, so every sample keeps
    # multiplicity 1; this doubles as a certificate cross-check.
    a = make_vector([1, 3, 9], "rational")
    report = probe_openness(a, 2, 1, samples=60, radius=Fraction(1, 2), seed=11)
    assert report.frequencies == {1: 60}
    assert report.observed_min == report.observed_max == 1
    assert report.counterexamples == ()


def test_probe_near_collision_center():
    a = make_vector([1, 2, 3], "rational")
    report = probe_openness(a, 2, 2, samples=40, radius=Fraction(1, 100), seed=3)
    assert sum(report.frequencies.values()) == 40
    # Perturbations generically destroy the collision; nothing exceeds g=2.
    assert set(report.frequencies) <= {1, 2}
    assert report.counterexamples == ()


def test_probe_empty_report():
    a = make_vector([1, 3, 9], "rational")
    report = probe_openness(a, 2, 1, samples=0, radius=Fraction(1, 4), seed=0)
    assert report.frequencies == {}
    assert report.observed_min is None and report.observed_max is None
    assert sum(report.frequencies.values()) == 0


def test_probe_requires_qualifying_center():
    a = make_vector([1, 2, 3], "rational")
    with pytest.raises(NotBhVectorError):
        probe_openness(a, 2, 1, samples=5, radius=Fraction(1, 10), seed=0)


def test_probe_deterministic_and_seed_sensitive():
    a = make_vector([1, 3, 9], "rational")
    r1 = probe_openness(a, 2, 1, samples=25, radius=Fraction(3), seed=42)
    r2 = probe_openness(a, 2, 1, samples=25, radius=Fraction(3), seed=42)
    assert r1 == r2
    r3 = probe_openness(a, 2, 1, samples=25, radius=Fraction(3), seed=43)
    assert r1 != r3  # different seed, different sampled points


def test_probe_gaussian_backend_stays_in_ball():
    a = make_vector(
        [GaussianRational(0, 0), GaussianRational(1, 0), GaussianRational(0, 1)],
        "gaussian",
    )
    report = probe_openness(a, 2, 1, samples=20, radius=Fraction(1, 8), seed=9)
    assert sum(report.frequencies.values()) == 20
    for counter in report.counterexamples:
        assert (counter - a).inf_norm().value <= Fraction(1, 64)


def test_probe_records_counterexample_candidates(monkeypatch):
    # Collisions are non-generic under fine dyadic sampling, so coarsen the
    # grid to offsets in {-radius, 0, +radius}: around the center (0, 3) with
    # radius 3 a sample like (3, 3) repeats a coordinate and its multiplicity
    # jumps above g = 1, which the report must surface.
    import bhset.bhg as bhg_module

    monkeypatch.setattr(bhg_module, "_DYADIC_DEN", 1)
    a = make_vector([0, 3], "rational")
    report = probe_openness(a, 1, 1, samples=40, radius=Fraction(3), seed=6)
    assert sum(report.frequencies.values()) == 40
    assert report.observed_max == 2
    assert len(report.counterexamples) == report.frequencies.get(2, 0) > 0
    for c in report.counterexamples:
        assert c.coords[0] == c.coords[1]
        assert (c - a).inf_norm().value <= 3


def test_probe_rejects_bad_parameters():
    a = make_vector([1, 3, 9], "rational")
    with pytest.raises(ValueError):
        probe_openness(a, 2, 1, samples=5, radius=Fraction(0), seed=0)
    with pytest.raises(ValueError):
        probe_openness(a, 2, 1, samples=-1, radius=Fraction(1), seed=0)
    with pytest.raises(ValueError):
        probe_openness(a, 2, 0, samples=5, radius=Fraction(1), seed=0)

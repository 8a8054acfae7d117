"""Membership verdicts, margins, certificates, and the U/V split."""

from fractions import Fraction

import pytest

from bhset.analysis import certify, is_bh, margin, uv_partition
from bhset.errors import (
    BackendMismatchError,
    DegenerateVectorError,
    NotBhVectorError,
)
from bhset.oracle import oracle_margin
from bhset.rng import CounterRng
from bhset.scalars import GaussianRational, rational_sqrt_lower
from bhset.sumset import dot
from bhset.vectors import make_vector


def gvec(*pairs):
    return make_vector([GaussianRational(r, i) for r, i in pairs], "gaussian")


def test_is_bh_positive():
    v = is_bh(make_vector([1, 3, 9], "rational"), 2)
    assert v.is_bh and v.has_distinct_coords and v.collision_witness is None


def test_is_bh_negative_with_witness():
    a = make_vector([1, 2, 3], "rational")
    v = is_bh(a, 2)
    assert not v.is_bh and v.has_distinct_coords
    x, y = v.collision_witness
    assert (x, y) == ((1, 0, 1), (0, 2, 0))
    assert dot(x, a) == dot(y, a)  # witness is verifiable


def test_is_bh_h1_is_distinctness():
    assert is_bh(make_vector([5, 7], "rational"), 1).is_bh
    assert not is_bh(make_vector([5, 5], "rational"), 1).is_bh


def test_repeated_coordinates_witness():
    a = make_vector([4, 1, 4], "rational")
    v = is_bh(a, 3)
    assert not v.is_bh and not v.has_distinct_coords
    assert v.collision_witness == ((3, 0, 0), (0, 0, 3))
    assert dot(v.collision_witness[0], a) == dot(v.collision_witness[1], a)


def test_float_backend_verdicts():
    assert is_bh(make_vector([1.0, 3.0, 9.0], "float"), 2).is_bh
    assert not is_bh(make_vector([1.0, 2.0, 3.0], "float"), 2).is_bh
    # Bit-exact default: 2.0 + 1e-9 and 1.0 + 1.0 differ; a fat tolerance
    # merges them and flips the verdict.
    a = make_vector([0.0, 1.0, 2.0 + 1e-9], "float")
    assert is_bh(a, 2, tolerance=0.0).is_bh
    assert not is_bh(a, 2, tolerance=1e-6).is_bh
    b = make_vector([0.0, 1.0, 2.5], "float")
    assert is_bh(b, 2, tolerance=1e-6).is_bh


def test_margin_examples():
    assert margin(make_vector([1, 3, 9], "rational"), 2).value == 2
    assert margin(make_vector([5, 7], "rational"), 1).value == 2
    m = margin(gvec((0, 0), (0, 1)), 1)
    assert m.squared and m.value == 1


def test_margin_rejects_non_members_and_floats():
    with pytest.raises(NotBhVectorError):
        margin(make_vector([1, 2, 3], "rational"), 2)
    with pytest.raises(BackendMismatchError):
        margin(make_vector([1.0, 2.0], "float"), 1)
    with pytest.raises(DegenerateVectorError):
        margin(make_vector([5], "rational"), 3)


def test_certify_examples():
    cert = certify(make_vector([1, 3, 9], "rational"), 2)
    assert cert.delta.value == 2 and cert.radius.value == 1
    cert = certify(make_vector([5, 7], "rational"), 1)
    assert cert.radius.value == 2
    halved = make_vector([Fraction(1, 2), Fraction(3, 2), Fraction(9, 2)], "rational")
    cert = certify(halved, 2)
    assert cert.delta.value == 1 and cert.radius.value == Fraction(1, 2)


def test_margin_scaling_translation_permutation():
    a = make_vector([2, 9, 31], "rational")
    base = margin(a, 2).value
    lam = Fraction(3, 7)
    assert margin(a.scale(lam), 2).value == lam * base
    shifted = make_vector([c + Fraction(5, 3) for c in a.coords], "rational")
    assert margin(shifted, 2).value == base
    perm = make_vector([a.coords[2], a.coords[0], a.coords[1]], "rational")
    assert margin(perm, 2).value == base


def test_margin_matches_oracle_on_random_instances():
    rng = CounterRng(99)
    checked = 0
    for k in range(40):
        n = 2 + rng.below(4, k, 0)
        h = 1 + rng.below(3, k, 1)
        coords = [rng.integer_in(-60, 60, k, 2, i) for i in range(n)]
        a = make_vector(coords, "rational")
        if not is_bh(a, h).is_bh:
            continue
        assert margin(a, h).value == oracle_margin(a, h).value
        checked += 1
    assert checked >= 20


def test_gaussian_margin_matches_oracle():
    rng = CounterRng(7)
    checked = 0
    for k in range(30):
        n = 2 + rng.below(3, k, 0)
        h = 1 + rng.below(2, k, 1)
        coords = [
            GaussianRational(rng.integer_in(-9, 9, k, 2, i), rng.integer_in(-9, 9, k, 3, i))
            for i in range(n)
        ]
        a = make_vector(coords, "gaussian")
        if not is_bh(a, h).is_bh:
            continue
        got = margin(a, h)
        want = oracle_margin(a, h)
        assert got.squared and got.value == want.value
        checked += 1
    assert checked >= 10


def test_uv_partition_examples():
    part = uv_partition(make_vector([1, 2, 3], "rational"), 2)
    assert part.delta_u.value == 1
    assert part.v_pairs == (((1, 0, 1), (0, 2, 0)),)
    assert part.u_nonempty

    clean = uv_partition(make_vector([1, 3, 9], "rational"), 2)
    assert clean.delta_u.value == 2 and clean.v_pairs == ()

    with pytest.raises(DegenerateVectorError):
        uv_partition(make_vector([0, 0], "rational"), 2)
    with pytest.raises(DegenerateVectorError):
        uv_partition(make_vector([5], "rational"), 2)


def test_uv_delta_matches_margin_for_members():
    a = make_vector([3, 10, 24, 51], "rational")
    assert is_bh(a, 2).is_bh
    assert uv_partition(a, 2).delta_u.value == margin(a, 2).value


def test_certificate_soundness_sampled():
    # Random and adversarial perturbations strictly inside the certified
    # ball must preserve membership.
    a = make_vector([1, 3, 9, 27], "rational")
    h = 2
    cert = certify(a, h)
    radius = cert.radius.value
    rng = CounterRng(1234)
    shrink = 1 - Fraction(1, 2**20)
    for k in range(60):
        offs = [
            radius * shrink * Fraction(rng.below(2**17 + 1, k, i) - 2**16, 2**16)
            for i in range(a.n)
        ]
        moved = make_vector([c + o for c, o in zip(a.coords, offs)], "rational")
        assert is_bh(moved, h).is_bh
    # Boundary probes: push a full +/- pattern to (1 - 2^-20) * radius.
    for pattern in [(1, 1, 1, 1), (1, -1, 1, -1), (-1, 0, 0, 1)]:
        offs = [radius * shrink * s for s in pattern]
        moved = make_vector([c + o for c, o in zip(a.coords, offs)], "rational")
        assert is_bh(moved, h).is_bh


def test_gaussian_certificate_soundness_sampled():
    a = gvec((0, 0), (1, 0), (0, 1))
    h = 2
    assert is_bh(a, h).is_bh
    cert = certify(a, h)
    # radius is squared: a real offset r qualifies when r^2 < radius value.
    rsq = cert.radius.value
    rng = CounterRng(77)
    for k in range(40):
        coords = []
        for i, c in enumerate(a.coords):
            jre = rng.below(2**17 + 1, k, i, 0) - 2**16
            jim = rng.below(2**17 + 1, k, i, 1) - 2**16
            # scale so that |offset|^2 <= rsq/4 < radius^2
            offs = GaussianRational(Fraction(jre, 2**16), Fraction(jim, 2**16))
            norm_sq = offs.mag_sq()
            if norm_sq:
                # shrink into the quarter ball using a rational bound
                target = rational_sqrt_lower(rsq / (4 * norm_sq))
                offs = offs * min(target, Fraction(1))
            coords.append(c + offs)
        moved = make_vector(coords, "gaussian")
        assert is_bh(moved, h).is_bh


def test_certify_refuses_float_backend():
    with pytest.raises(BackendMismatchError):
        certify(make_vector([1.0, 2.0], "float"), 1)


def test_closest_pair_matches_brute_force_on_large_sets():
    # Sets well above the divide-and-conquer cutoff, so the recursion and
    # strip logic actually run.
    from bhset.analysis import _closest_pair_sq

    rng = CounterRng(4096)
    for trial in range(4):
        pts = set()
        idx = 0
        while len(pts) < 220:
            pts.add(
                (
                    rng.integer_in(-500, 500, trial, idx, 0),
                    rng.integer_in(-500, 500, trial, idx, 1),
                )
            )
            idx += 1
        pts = sorted(pts)
        brute = min(
            (q[0] - p[0]) ** 2 + (q[1] - p[1]) ** 2
            for i, p in enumerate(pts)
            for q in pts[i + 1 :]
        )
        assert _closest_pair_sq(pts) == brute


def test_gaussian_margin_above_divide_and_conquer_cutoff():
    # 126 sums at h=4, n=6 force the recursive closest-pair path.
    rng = CounterRng(512)
    attempt = 0
    while True:
        coords = [
            GaussianRational(
                rng.integer_in(-50, 50, attempt, i, 0),
                rng.integer_in(-50, 50, attempt, i, 1),
            )
            for i in range(6)
        ]
        a = make_vector(coords, "gaussian")
        if is_bh(a, 4).is_bh:
            break
        attempt += 1
    got = margin(a, 4)
    want = oracle_margin(a, 4)
    assert got.squared and got.value == want.value


def test_uv_partition_gaussian():
    a = make_vector(
        [GaussianRational(0, 1), GaussianRational(1, 1), GaussianRational(2, 1)],
        "gaussian",
    )
    # Real parts are 1, 2, 3 shifted by i: the h=2 collision (1,0,1)/(0,2,0)
    # survives because the imaginary parts cancel identically.
    part = uv_partition(a, 2)
    assert part.v_pairs == (((1, 0, 1), (0, 2, 0)),)
    assert part.delta_u.squared and part.delta_u.value == 1
    clean = uv_partition(gvec((0, 0), (1, 0), (0, 1)), 2)
    assert clean.v_pairs == ()
    assert clean.delta_u.value == margin(gvec((0, 0), (1, 0), (0, 1)), 2).value

import itertools

import pytest

from tbshift.lattice import (
    DELTA,
    E1,
    E2,
    ETA,
    IDENTITY,
    ORIGIN,
    XI,
    AffineSL2,
    LatticePoint,
    det2,
    gcd2,
    mat_apply,
    named_elements,
    spiral_index,
    spiral_points,
)
from tbshift.selftest import random_sl2


def test_det2_examples():
    assert det2(LatticePoint(1, 0), LatticePoint(0, 1)) == 1
    assert det2(LatticePoint(2, 3), LatticePoint(2, 3)) == 0
    assert det2(LatticePoint(1, 0), LatticePoint(0, 0)) == 0


def test_gcd2_examples():
    assert gcd2(LatticePoint(0, 0)) == 0
    assert gcd2(LatticePoint(2, 4)) == 2
    assert gcd2(LatticePoint(-3, 0)) == 3


def test_named_constants():
    consts = named_elements()
    assert consts["delta"].matrix == ((1, 1), (0, 1))
    assert consts["eta"].matrix == ((-1, 0), (0, -1))
    assert consts["xi"] == AffineSL2(E1, ((-1, -1), (1, 0)))


def test_three_cycle_and_orders():
    assert XI.act(ORIGIN) == E1
    assert XI.act(E1) == E2
    assert XI.act(E2) == ORIGIN
    assert XI * XI == AffineSL2(E2, ((0, 1), (-1, -1)))
    assert (XI * XI * XI).is_identity


def test_eta_and_delta_actions():
    assert ETA.act(E1) == LatticePoint(-1, 0)
    assert ETA.act(ORIGIN) == ORIGIN
    for n in range(-5, 6):
        assert DELTA.act(LatticePoint(n, 0)) == LatticePoint(n, 0)


def test_affine_group_laws(rng):
    for _ in range(50):
        a = AffineSL2(LatticePoint(rng.randint(-3, 3), rng.randint(-3, 3)), random_sl2(rng))
        b = AffineSL2(LatticePoint(rng.randint(-3, 3), rng.randint(-3, 3)), random_sl2(rng))
        k = LatticePoint(rng.randint(-5, 5), rng.randint(-5, 5))
        assert (a * b).act(k) == a.act(b.act(k))
        assert (a * a.inverse()).is_identity
        assert (a.inverse() * a).is_identity


def test_affine_rejects_bad_determinant():
    with pytest.raises(ValueError):
        AffineSL2(ORIGIN, ((1, 0), (0, -1)))


def test_sl2_invariance_of_det_and_gcd(rng):
    for _ in range(200):
        gamma = random_sl2(rng)
        k = LatticePoint(rng.randint(-9, 9), rng.randint(-9, 9))
        k0 = LatticePoint(rng.randint(-9, 9), rng.randint(-9, 9))
        assert det2(k, k0) == det2(mat_apply(gamma, k), mat_apply(gamma, k0))
        assert gcd2(k) == gcd2(mat_apply(gamma, k))


def test_mod2_identity_exhaustive_window():
    for q1, r1, q2, r2 in itertools.product(range(-6, 7), repeat=4):
        k, k0 = LatticePoint(q1, r1), LatticePoint(q2, r2)
        assert (det2(k, k0) - gcd2(k) - gcd2(k0) + gcd2(k + k0)) % 2 == 0


def test_off_axis_orbit_of_shear_is_unbounded():
    delta_inv = DELTA.inverse()
    for start in [LatticePoint(0, 1), LatticePoint(2, -1), LatticePoint(-1, 3)]:
        seen = set()
        point = start
        for _ in range(20):
            seen.add(point)
            point = delta_inv.act(point)
        assert len(seen) == 20  # never repeats: the orbit is infinite


def test_spiral_enumeration_prefix():
    expected = [
        (0, 0), (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1),
        (1, -1), (2, -1),
    ]
    points = list(itertools.islice(spiral_points(), len(expected)))
    assert [(p.q, p.r) for p in points] == expected


def test_spiral_index_matches_enumeration():
    for i, p in enumerate(itertools.islice(spiral_points(), 200)):
        assert spiral_index(p) == i


def test_identity_is_neutral():
    assert IDENTITY * XI == XI
    assert XI * IDENTITY == XI

import random
from dataclasses import replace
from fractions import Fraction

import pytest

from tbshift.abelian import AbGroup, AbHom, Character, enumerate_automorphisms
from tbshift.algebra import AlgebraElement
from tbshift.classify import (
    build_pi,
    centralizer,
    check_conditions,
    decide_conjugacy,
    verify_pi,
)
from tbshift.cocycle import trivial_cocycle
from tbshift.configs import dipole, row_major_key
from tbshift.dynamics import Triplet, beta
from tbshift.families import (
    det_form_cocycle,
    lattice_det_triplet,
    mod_q_triplet,
    product_triplet,
    trivial_triplet,
)
from tbshift.lattice import AffineSL2, LatticePoint
from tbshift.scalars import Phase
from tbshift.selftest import random_algebra_element, random_point, random_sl2


@pytest.fixture
def trip3():
    return mod_q_triplet(3)


def random_rational_phase(rng, max_den=40):
    den = rng.randrange(1, max_den + 1)
    return Phase(rng.randrange(den), den)


def test_check_conditions_identity(trip3):
    assert check_conditions(trip3, trip3, AbHom.identity(trip3.group)) == (True, True)


def test_check_conditions_unipotent(trip3):
    phi = AbHom(trip3.group, trip3.group, ((1, 0), (1, 1)))
    assert check_conditions(trip3, trip3, phi) == (True, True)


def test_check_conditions_reflection_flips_the_form():
    # on the lattice, a determinant -1 map negates the star value, so the
    # cocycle condition needs theta_b = -theta_a
    ta = lattice_det_triplet(Phase(1, 16))
    phi = AbHom(ta.group, ta.group, ((1, 0), (0, -1)))
    cocycle_ok, character_ok = check_conditions(ta, ta, phi)
    assert not cocycle_ok and character_ok
    tb = lattice_det_triplet(Phase(15, 16))
    assert check_conditions(ta, tb, phi) == (True, True)


def test_check_conditions_rejects_non_isomorphism(trip3):
    bad = AbHom(trip3.group, trip3.group, ((1, 0), (0, 0)))
    with pytest.raises(ValueError, match="isomorphism"):
        check_conditions(trip3, trip3, bad)


def test_decide_identical_triplets(trip3):
    report = decide_conjugacy(trip3, trip3)
    assert report.verdict == "YES" and report.complete
    assert report.witness == AbHom.identity(trip3.group)


def test_decide_group_mismatch():
    report = decide_conjugacy(mod_q_triplet(3), mod_q_triplet(5))
    assert report.verdict == "NO" and report.complete


def test_decide_character_square_separation(trip3):
    # same group and cocycle, character replaced by its square: for q = 3
    # squaring permutes the characters, so a witness still exists
    squared = Triplet(trip3.group, trip3.cocycle, trip3.character.power(2))
    report = decide_conjugacy(trip3, squared)
    assert report.complete
    assert report.verdict == "YES"
    assert check_conditions(trip3, squared, report.witness) == (True, True)


def test_decide_finite_negative_case():
    # mod-3 data against the trivial cocycle on the same group: no witness
    ta = mod_q_triplet(3)
    tb = trivial_triplet(ta.group)
    report = decide_conjugacy(ta, tb)
    assert report.verdict == "NO" and report.complete
    assert not report.checks["cocycle"]


def test_lattice_closed_form_separation():
    ta = lattice_det_triplet(Phase(1, 16))
    tb = lattice_det_triplet(Phase(3, 16))
    report = decide_conjugacy(ta, tb)
    assert report.verdict == "NO" and report.complete
    tc = lattice_det_triplet(Phase(15, 16))
    report2 = decide_conjugacy(ta, tc)
    assert report2.verdict == "YES" and report2.complete
    report3 = decide_conjugacy(ta, ta)
    assert report3.verdict == "YES" and report3.witness == AbHom.identity(ta.group)


def test_lattice_closed_form_vs_bounded_enumeration(rng):
    # the closed form and a bound-3 search must agree on random phase pairs
    for i in range(50):
        theta_a = random_rational_phase(rng)
        pick = i % 3
        if pick == 0:
            theta_b = theta_a
        elif pick == 1:
            theta_b = -theta_a
        else:
            theta_b = random_rational_phase(rng)
        ta = lattice_det_triplet(theta_a)
        tb = lattice_det_triplet(theta_b)
        fast = decide_conjugacy(ta, tb)
        slow = decide_conjugacy_by_search(ta, tb, 3)
        if fast.verdict == "YES":
            assert slow == "YES"
        elif fast.verdict == "NO":
            assert slow != "YES"
        else:
            pytest.fail(f"closed form left {theta_a}, {theta_b} undecided")


def decide_conjugacy_by_search(ta, tb, bound):
    from tbshift.abelian import enumerate_isomorphisms

    isos, _ = enumerate_isomorphisms(ta.group, tb.group, bound)
    for phi in isos:
        if check_conditions(ta, tb, phi) == (True, True):
            return "YES"
    return "NONE_FOUND"


def test_lattice_unknown_without_bound():
    # equal star values but different characters: the closed form cannot
    # settle it and no bound was given
    g = AbGroup(2)
    chi = Character(g, (Phase(1, 5), Phase.ZERO))
    ta = Triplet(g, det_form_cocycle(Phase(1, 16), g), chi)
    tb = Triplet(g, det_form_cocycle(Phase(1, 16), g), Character(g, (Phase.ZERO, Phase(1, 5))))
    report = decide_conjugacy(ta, tb)
    assert report.verdict == "UNKNOWN" and not report.complete
    # with a bound the swap matrix is found
    report2 = decide_conjugacy(ta, tb, bound=1)
    assert report2.verdict == "YES"
    assert check_conditions(ta, tb, report2.witness) == (True, True)


def test_build_pi_identity_fixes_units(trip3, rng):
    pi = build_pi(trip3, trip3, AbHom.identity(trip3.group))
    for _ in range(10):
        lam = dipole(
            trip3.group.element((rng.randrange(3), rng.randrange(3)))
        )
        x = AlgebraElement.unit(trip3.cocycle, lam)
        assert pi(x) == x


def test_build_pi_rejects_failing_conditions():
    ta = lattice_det_triplet(Phase(1, 16))
    phi = AbHom(ta.group, ta.group, ((1, 0), (0, -1)))
    with pytest.raises(ValueError, match="conditions"):
        build_pi(ta, ta, phi)


def test_pi_maps_units_to_single_unimodular_terms(trip3, rng):
    phi = AbHom(trip3.group, trip3.group, ((1, 0), (1, 1)))
    pi = build_pi(trip3, trip3, phi)
    from tbshift.selftest import random_zero_sum_config

    for _ in range(20):
        lam = random_zero_sum_config(rng, trip3.group)
        image = pi(AlgebraElement.unit(trip3.cocycle, lam))
        (key, coeff), = image.terms.items()
        assert key == lam.mapped(phi)
        assert coeff * coeff.conjugate() == type(coeff).ONE
    a = random_algebra_element(rng, trip3.cocycle)
    assert pi(a).trace() == a.trace()


def test_verify_pi_passes_for_valid_witness(trip3, rng):
    phi = AbHom(trip3.group, trip3.group, ((1, 0), (1, 1)))
    pi = build_pi(trip3, trip3, phi)
    pairs = [
        (random_algebra_element(rng, trip3.cocycle), random_algebra_element(rng, trip3.cocycle))
        for _ in range(25)
    ]
    extra_moves = [AffineSL2(random_point(rng), random_sl2(rng)) for _ in range(5)]
    from tbshift.classify import CANONICAL_MOVES

    report = verify_pi(pi, pairs, tuple(CANONICAL_MOVES) + tuple(extra_moves))
    assert report.ok, report.failures[:3]


def test_pi_phase_is_enumeration_independent(trip3, rng):
    phi = AbHom(trip3.group, trip3.group, ((1, 0), (1, 1)))
    pi = build_pi(trip3, trip3, phi)
    alt = replace(pi, order_key=row_major_key)
    for _ in range(20):
        x = random_algebra_element(rng, trip3.cocycle)
        assert pi(x) == alt(x)


def _half_shift_pair():
    lat = AbGroup(2)
    ta = Triplet(lat, trivial_cocycle(lat), Character.trivial(lat))
    tb = Triplet(lat, trivial_cocycle(lat), Character(lat, (Phase(1, 2), Phase.ZERO)))
    return ta, tb


def test_corrupted_weight_breaks_equivariance(rng):
    ta, tb = _half_shift_pair()
    pi = build_pi(ta, tb, AbHom.identity(ta.group))
    probes = [
        (
            AlgebraElement.unit(ta.cocycle, dipole(ta.group.element((1, 0)))),
            AlgebraElement.unit(ta.cocycle, dipole(ta.group.element((0, 1)))),
        ),
        (random_algebra_element(rng, ta.cocycle), random_algebra_element(rng, ta.cocycle)),
    ]
    assert verify_pi(pi, probes).ok
    mutated = replace(pi, weight=lambda k: 1)
    report = verify_pi(mutated, probes)
    assert not report.ok
    assert any(kind == "equivariance" for kind, *_ in report.failures)


def test_conjugacy_yes_witnesses_verify(rng):
    # soundness: every YES witness actually intertwines the actions
    cases = [
        (mod_q_triplet(3), mod_q_triplet(3)),
        (lattice_det_triplet(Phase(1, 16)), lattice_det_triplet(Phase(15, 16))),
    ]
    for ta, tb in cases:
        report = decide_conjugacy(ta, tb)
        assert report.verdict == "YES"
        pi = build_pi(ta, tb, report.witness)
        pairs = [
            (random_algebra_element(rng, ta.cocycle), random_algebra_element(rng, ta.cocycle))
            for _ in range(10)
        ]
        assert verify_pi(pi, pairs).ok


def test_centralizer_mod_q():
    for q in (3, 5, 7):
        rep = centralizer(mod_q_triplet(q))
        assert rep.verdict == "OK" and rep.complete
        assert len(rep.elements) == q
        assert rep.structure.invariant_factors == (q,)
        for phi in rep.elements:
            assert phi.matrix[0] == (1, 0) and phi.matrix[1][1] == 1


def test_centralizer_conditions_hold(trip3):
    rep = centralizer(trip3)
    for phi in rep.elements:
        assert check_conditions(trip3, trip3, phi) == (True, True)


def test_centralizer_is_closed(trip3):
    rep = centralizer(trip3)
    pool = set(rep.elements)
    ident = AbHom.identity(trip3.group)
    assert ident in pool
    for f in pool:
        for g in pool:
            assert f.compose(g) in pool
        assert any(f.compose(g) == ident for g in pool)


def test_centralizer_orbit_consistency(trip3):
    # precomposing by a centralizer element does not change the conditions
    rep = centralizer(trip3)
    outside = [
        phi
        for phi in enumerate_automorphisms(trip3.group)
        if phi not in set(rep.elements)
    ]
    for phi in outside[:10]:
        base = check_conditions(trip3, trip3, phi)
        for c in rep.elements:
            assert check_conditions(trip3, trip3, phi.compose(c)) == base


def test_centralizer_trivial_data():
    rep = centralizer(trivial_triplet(AbGroup(0, (3,))))
    assert len(rep.elements) == 2
    assert rep.structure.invariant_factors == (2,)


def test_centralizer_product():
    trip = product_triplet(mod_q_triplet(3), mod_q_triplet(5))
    rep = centralizer(trip)
    assert len(rep.elements) == 15
    assert rep.structure.invariant_factors == (15,)
    assert rep.structure.description == "Z/15"


def test_centralizer_lattice_cases():
    # trivial squared character: the whole matrix group commutes
    rep = centralizer(lattice_det_triplet(Phase(1, 16)))
    assert rep.verdict == "INFINITE" and "SL(2,Z)" in rep.note
    rep2 = centralizer(trivial_triplet(AbGroup(2)))
    assert rep2.verdict == "INFINITE" and "GL(2,Z)" in rep2.note
    # nontrivial character: no closed form, bounded search only
    g = AbGroup(2)
    trip = Triplet(g, det_form_cocycle(Phase(1, 16), g), Character(g, (Phase(1, 5), Phase.ZERO)))
    rep3 = centralizer(trip)
    assert rep3.verdict == "UNKNOWN" and not rep3.complete
    rep4 = centralizer(trip, bound=1)
    assert rep4.verdict == "OK" and not rep4.complete
    assert AbHom.identity(g) in rep4.elements

"""Deterministic property suites behind the `selftest` CLI command.

Each suite re-derives one pillar of the library from scratch on randomized
but seeded data and reports counts; the CLI turns the reports into JSON.
Byte-identical output across runs is part of the contract.
"""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .abelian import AbGroup, AbHom, Character, dual_characters
from .algebra import (
    AlgebraElement,
    TensorElement,
    apply_diagonal_character,
    malleability_flow,
    malleability_unitary,
)
from .classify import build_pi, verify_pi
from .cocycle import (
    BilinearCocycle,
    TableCocycle,
    coboundary_cocycle,
    coboundary_witness,
    cohomologous,
    to_table,
    trivial_cocycle,
)
from .configs import Config, dipole
from .dynamics import Motion, Triplet, motion_mul, verify_motion_relations, weak_mixing_witness
from .families import mod_q_triplet
from .lattice import (
    IDENTITY_MAT,
    LatticePoint,
    det2,
    gcd2,
    mat_apply,
    mat_mul,
)
from .scalars import Cyclotomic, Phase

SEED = 74207281


def random_sl2(rng: random.Random, length: int = 5):
    s = ((0, -1), (1, 0))
    t = ((1, 1), (0, 1))
    t_inv = ((1, -1), (0, 1))
    m = IDENTITY_MAT
    for _ in range(rng.randrange(1, length + 1)):
        m = mat_mul(m, rng.choice((s, t, t_inv)))
    return m


def random_point(rng: random.Random, radius: int = 4) -> LatticePoint:
    return LatticePoint(rng.randint(-radius, radius), rng.randint(-radius, radius))


def random_zero_sum_config(rng: random.Random, group: AbGroup, radius: int = 2) -> Config:
    points = []
    while len(points) < rng.randrange(1, 4):
        p = random_point(rng, radius)
        if p not in points:
            points.append(p)
    items = []
    total = group.zero()
    for p in points[:-1]:
        coords = [rng.randint(-2, 2) for _ in range(group.free_rank)]
        coords += [rng.randrange(n) for n in group.torsion]
        value = group.element(coords)
        items.append((p, value))
        total = total + value
    items.append((points[-1], -total))
    return Config.from_items(group, items)


def random_algebra_element(
    rng: random.Random, cocycle, terms: int = 2, radius: int = 2
) -> AlgebraElement:
    out: dict = {}
    for _ in range(terms):
        cfg = random_zero_sum_config(rng, cocycle.group, radius)
        coeff = Cyclotomic.from_phase(Phase(rng.randrange(12), 12)) * Fraction(
            rng.randint(1, 3)
        )
        out[cfg] = out.get(cfg, Cyclotomic.ZERO) + coeff
    return AlgebraElement(cocycle, out)


def suite_detgcd(rng: random.Random) -> dict:
    """SL(2,Z)-invariance of det and gcd, and the mod-2 identity."""
    failures = 0
    for _ in range(200):
        gamma = random_sl2(rng)
        k, k0 = random_point(rng, 8), random_point(rng, 8)
        gk, gk0 = mat_apply(gamma, k), mat_apply(gamma, k0)
        if det2(k, k0) != det2(gk, gk0) or gcd2(k) != gcd2(gk):
            failures += 1
    window_failures = 0
    pairs = 0
    for q1 in range(-6, 7):
        for r1 in range(-6, 7):
            for q2 in range(-6, 7):
                for r2 in range(-6, 7):
                    k, k0 = LatticePoint(q1, r1), LatticePoint(q2, r2)
                    pairs += 1
                    if (det2(k, k0) - gcd2(k) - gcd2(k0) + gcd2(k + k0)) % 2:
                        window_failures += 1
    return {
        "ok": failures == 0 and window_failures == 0,
        "invariance_failures": failures,
        "window_pairs": pairs,
        "window_failures": window_failures,
    }


def witness_catalog(rng: random.Random, count: int) -> list:
    """Pairs of cocycles over groups of order <= 16, mixing cohomologous
    (explicit coboundary shifts) and non-cohomologous (distinct bilinear
    classes) cases, in table form."""
    shapes = [(2, 2), (4,), (3,), (3, 3), (2, 4), (5,), (2, 2, 2), (13,)]
    pairs = []
    while len(pairs) < count:
        group = AbGroup(0, rng.choice(shapes))
        base = _random_bilinear(rng, group)
        pick = rng.randrange(3)
        if pick == 0:
            other = base
        elif pick == 1:
            other = _random_bilinear(rng, group)
        else:
            other = trivial_cocycle(group)
        b = {
            g: Phase(rng.randrange(8), 8) if not g.is_zero else Phase.ZERO
            for g in group.elements()
        }
        shifted = coboundary_cocycle(group, b)
        left = to_table(base)
        right = to_table(other)
        lifted = {
            key: right.entries[key] + shifted.entries[key] for key in right.entries
        }
        pairs.append((left, TableCocycle(group, lifted)))
    return pairs


def _random_bilinear(rng: random.Random, group: AbGroup) -> BilinearCocycle:
    from math import gcd as _gcd

    r = group.rank
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            g = _gcd(group.generator_order(i), group.generator_order(j))
            row.append(Phase(rng.randrange(g), g) if g > 1 else Phase.ZERO)
        rows.append(tuple(row))
    return BilinearCocycle(group, tuple(rows))


def suite_cocycles(rng: random.Random, count: int = 12) -> dict:
    """The star-form criterion against the literal coboundary-witness solver."""
    agreements = 0
    checked = 0
    for mu1, mu2 in witness_catalog(rng, count):
        checked += 1
        fast = cohomologous(mu1, mu2)
        witness = coboundary_witness(mu1, mu2)
        if fast == (witness is not None):
            agreements += 1
    return {"ok": agreements == checked, "pairs": checked, "agreements": agreements}


def suite_actions(rng: random.Random) -> dict:
    """Motion-group associativity and the two composition laws of the action."""
    t = mod_q_triplet(3)
    chars = list(dual_characters(t.group))
    assoc_failures = 0
    for _ in range(100):
        a, b, c = (
            Motion(rng.choice(chars), random_point(rng), random_sl2(rng))
            for _ in range(3)
        )
        if motion_mul(t, motion_mul(t, a, b), c) != motion_mul(t, a, motion_mul(t, b, c)):
            assoc_failures += 1
    samples = []
    for _ in range(50):
        x = random_algebra_element(rng, t.cocycle)
        samples.append((random_point(rng), random_point(rng), random_sl2(rng), x))
    relation = verify_motion_relations(t, samples)
    return {
        "ok": assoc_failures == 0 and relation.ok,
        "associativity_failures": assoc_failures,
        "relation_failures": len(relation.counterexamples),
    }


def suite_intertwiner(rng: random.Random) -> dict:
    """The explicit intertwiner passes its checks; corrupting the gcd weight breaks it."""
    t = mod_q_triplet(3)
    phi = AbHom(t.group, t.group, ((1, 0), (1, 1)))
    pi = build_pi(t, t, phi)
    pairs = [
        (random_algebra_element(rng, t.cocycle), random_algebra_element(rng, t.cocycle))
        for _ in range(25)
    ]
    good = verify_pi(pi, pairs)

    # weight sensitivity needs a character mismatch of order two, which a
    # group of odd exponent cannot carry; use the lattice with a half shift
    lat = AbGroup(2)
    ta = Triplet(lat, trivial_cocycle(lat), Character.trivial(lat))
    tb = Triplet(lat, trivial_cocycle(lat), Character(lat, (Phase(1, 2), Phase.ZERO)))
    pi2 = build_pi(ta, tb, AbHom.identity(lat))
    mutated = replace(pi2, weight=lambda k: 1)
    probes = [
        (AlgebraElement.unit(ta.cocycle, dipole(lat.element((1, 0)))),
         AlgebraElement.unit(ta.cocycle, dipole(lat.element((0, 1))))),
        (random_algebra_element(rng, ta.cocycle), random_algebra_element(rng, ta.cocycle)),
    ]
    clean = verify_pi(pi2, probes)
    broken = verify_pi(mutated, probes)
    return {
        "ok": good.ok and clean.ok and not broken.ok,
        "verify_failures": len(good.failures),
        "mutation_detected": not broken.ok,
    }


def suite_malleability(rng: random.Random, q: int = 3) -> dict:
    """The swap unitary and the rational-time flow on the tensor square."""
    t = mod_q_triplet(q)
    mu = t.cocycle
    v = malleability_unitary(mu)
    n = t.group.order()
    one = TensorElement.one(mu)
    checks = {
        "self_adjoint": v.star() == v,
        "square": v * v == one.scaled(n),
    }
    swap_ok = True
    for g in t.group.elements():
        x = TensorElement.unit(mu, g, t.group.zero())
        if malleability_flow(mu, Fraction(1), x) != TensorElement.unit(
            mu, t.group.zero(), g
        ):
            swap_ok = False
    checks["full_swap"] = swap_ok
    half = Fraction(1, 2)
    flow_ok = True
    char_ok = True
    chars = list(dual_characters(t.group))
    for _ in range(5):
        g = t.group.element([rng.randrange(q), rng.randrange(q)])
        h = t.group.element([rng.randrange(q), rng.randrange(q)])
        x = TensorElement.unit(mu, g, h)
        once = malleability_flow(mu, half, x)
        if malleability_flow(mu, half, once) != malleability_flow(mu, Fraction(1), x):
            flow_ok = False
        c = rng.choice(chars)
        if apply_diagonal_character(c, malleability_flow(mu, half, x)) != malleability_flow(
            mu, half, apply_diagonal_character(c, x)
        ):
            char_ok = False
    checks["half_composition"] = flow_ok
    checks["character_commutation"] = char_ok
    return {"ok": all(checks.values()), **checks}


def suite_weakmixing(rng: random.Random) -> dict:
    """Exact trace factorization under a large enough shift."""
    t = mod_q_triplet(3)
    found = 0
    for _ in range(8):
        elems = [random_algebra_element(rng, t.cocycle) for _ in range(rng.randrange(1, 4))]
        k = weak_mixing_witness(t, elems)
        if k is not None:
            found += 1
    return {"ok": found == 8, "witnesses": found}


SUITES: Dict[str, Callable] = {
    "detgcd": suite_detgcd,
    "cocycles": suite_cocycles,
    "actions": suite_actions,
    "intertwiner": suite_intertwiner,
    "malleability": suite_malleability,
    "weakmixing": suite_weakmixing,
}


def run_suites(names: Optional[List[str]] = None, q: int = 3) -> dict:
    chosen = names or sorted(SUITES)
    report = {}
    for name in chosen:
        if name not in SUITES:
            raise KeyError(name)
        rng = random.Random(SEED + sum(ord(c) for c in name))
        if name == "malleability":
            report[name] = SUITES[name](rng, q)
        else:
            report[name] = SUITES[name](rng)
    report_ok = all(entry["ok"] for entry in report.values())
    return {"ok": report_ok, "suites": report}

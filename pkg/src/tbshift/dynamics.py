"""The twisted Bernoulli shift action and its ambient motion group.

A Triplet (H, mu, chi) fixes the whole setup: the group of motions is the
product of the dual of H, the lattice translations and SL(2,Z), with a
chi-twisted multiplication law.  rho is its action on formal sums over
lattice configurations; beta is the restriction to translations and
matrices acting on zero-sum sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .abelian import AbGroup, Character, separating_characters
from .algebra import AlgebraElement, apply_diagonal_character, _zeta
from .lattice import (
    IDENTITY_MAT,
    ORIGIN,
    AffineSL2,
    LatticePoint,
    Mat2,
    det2,
    mat_mul,
    mat_apply,
    spiral_points,
)
from .scalars import Phase


@dataclass(frozen=True)
class Triplet:
    """(H, mu, chi): a group, a normalized 2-cocycle and a character on it."""

    group: AbGroup
    cocycle: object
    character: Character

    def validate(self) -> None:
        if self.group.is_trivial:
            raise ValueError("the base group must be nontrivial")
        if self.cocycle.group != self.group:
            raise ValueError("cocycle is not over the base group")
        if self.character.group != self.group:
            raise ValueError("character is not over the base group")
        self.cocycle.validate()


@dataclass(frozen=True)
class Motion:
    """Element (c, k, gamma) of the extended motion group over a triplet."""

    char: Character
    shift: LatticePoint = ORIGIN
    matrix: Mat2 = IDENTITY_MAT

    @property
    def move(self) -> AffineSL2:
        return AffineSL2(self.shift, self.matrix)


def motion_identity(t: Triplet) -> Motion:
    return Motion(Character.trivial(t.group))


def motion_mul(t: Triplet, a: Motion, b: Motion) -> Motion:
    """(c1, k, g1)(c2, l, g2) = (c1 c2 chi^det(k, g1 l), k + g1 l, g1 g2)."""
    moved = mat_apply(a.matrix, b.shift)
    twist = t.character.power(det2(a.shift, moved))
    return Motion(a.char * b.char * twist, a.shift + moved, mat_mul(a.matrix, b.matrix))


def rho(t: Triplet, g: Motion, x: AlgebraElement) -> AlgebraElement:
    """Apply rho(c) o rho(k) o rho(gamma) termwise, with exact phases.

    rho(gamma) relocates supports by the matrix; rho(k) shifts supports and
    multiplies by chi(value at m)^det(k, m) over the support; rho(c)
    multiplies by c of the total content.
    """
    if x.group != t.group:
        raise ValueError("element is not over the triplet's group")
    chi = t.character
    rotate = AffineSL2(ORIGIN, g.matrix)
    translate = AffineSL2(g.shift, IDENTITY_MAT)
    out: dict = {}
    for cfg, coeff in x.terms.items():
        rotated = cfg.moved_by(rotate)
        phase = Phase.ZERO
        for point, value in rotated.items():
            d = det2(g.shift, point)
            if d:
                phase = phase + chi(value) * d
        for _, value in rotated.items():
            phase = phase + g.char(value)
        key = rotated.moved_by(translate)
        term = coeff * _zeta(phase)
        out[key] = out[key] + term if key in out else term
    return AlgebraElement(x.cocycle, out)


def beta(t: Triplet, move: AffineSL2, x: AlgebraElement) -> AlgebraElement:
    """The twisted Bernoulli shift: rho with the trivial character twist.

    Defined on the zero-sum-supported subalgebra, which it preserves.
    """
    if not x.is_zero_sum_supported:
        raise ValueError("beta acts on zero-sum-supported elements only")
    return rho(t, Motion(Character.trivial(t.group), move.translation, move.matrix), x)


@dataclass
class RelationReport:
    ok: bool
    counterexamples: list = field(default_factory=list)


def verify_motion_relations(t: Triplet, samples: Sequence) -> RelationReport:
    """Check the two composition identities of the lattice part of rho.

    samples: iterable of (k, l, gamma, x) with k, l lattice points, gamma an
    SL(2,Z) matrix and x an AlgebraElement over the triplet.
    """
    report = RelationReport(True)
    triv = Character.trivial(t.group)
    for k, l, gamma, x in samples:
        lhs = rho(t, Motion(triv, k), rho(t, Motion(triv, l), x))
        rhs = rho(
            t,
            Motion(t.character.power(det2(k, l)), k + l),
            x,
        )
        if lhs != rhs:
            report.ok = False
            report.counterexamples.append(("translation", k, l))
        lhs2 = rho(t, Motion(triv, mat_apply(gamma, k)), rho(t, Motion(triv, ORIGIN, gamma), x))
        rhs2 = rho(t, Motion(triv, ORIGIN, gamma), rho(t, Motion(triv, k), x))
        if lhs2 != rhs2:
            report.ok = False
            report.counterexamples.append(("rotation", k, gamma))
    return report


def is_dual_fixed(t: Triplet, x: AlgebraElement) -> bool:
    """True iff x is fixed by the whole diagonal dual action.

    For finite H every character is tried; otherwise a finite separating
    family (one character per generator, of order exceeding twice any
    coordinate that occurs in x) suffices, because only finitely many
    values appear in a finite sum.
    """
    values = [value for cfg in x.terms for _, value in cfg.items()]
    for c in separating_characters(t.group, values):
        if apply_diagonal_character(c, x) != x:
            return False
    return True


def weak_mixing_witness(t: Triplet, elems: Sequence[AlgebraElement]) -> LatticePoint:
    """First lattice point k (spiral order) with tr(a_i beta(k)(a_j)) =
    tr(a_i) tr(a_j) holding exactly for all pairs.

    Such a k always exists for finitely supported elements: any shift that
    moves every support of every a_j off every support of every a_i except
    the zero term works.
    """
    for elem in elems:
        if not elem.is_zero_sum_supported:
            raise ValueError("weak mixing witness applies to zero-sum-supported elements")
    traces = [a.trace() for a in elems]
    for k in spiral_points():
        move = AffineSL2(k, IDENTITY_MAT)
        shifted = [beta(t, move, a) for a in elems]
        ok = True
        for (a, ta) in zip(elems, traces):
            for (b, tb) in zip(shifted, traces):
                if (a * b).trace() != ta * tb:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return k
    raise AssertionError("unreachable: a witness always exists")

"""Conjugacy decisions, the explicit intertwiner, and centralizers.

Whether two triplets (H, mu, chi) give conjugate shift actions reduces to
group data: an isomorphism phi with (i) equal star bicharacters after
pullback and (ii) equal squared characters after pullback.  Given such a
phi, an explicit basis-to-basis intertwiner is built and can be verified
directly (multiplicativity, star, equivariance).  The centralizer of one
action is the automorphism group cut out by the same two conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

from .abelian import (
    AbElem,
    AbHom,
    StructureReport,
    abstractly_isomorphic,
    enumerate_isomorphisms,
    group_structure,
    is_isomorphism,
)
from .algebra import AlgebraElement, _zeta
from .cocycle import BilinearCocycle, star_bicharacter
from .configs import Config, mu_hat
from .dynamics import Triplet, beta
from .lattice import (
    DELTA,
    E1,
    E2,
    ETA,
    IDENTITY_MAT,
    XI,
    AffineSL2,
    LatticePoint,
    gcd2,
    spiral_index,
)
from .scalars import Phase


def check_conditions(ta: Triplet, tb: Triplet, phi: AbHom) -> tuple:
    """(cocycle condition, character condition) for a candidate isomorphism.

    Cocycle condition: the star bicharacter of mu_a equals that of mu_b
    pulled back through phi, tested on generator pairs (enough, by
    bilinearity).  Character condition: doubled phases agree on generators.
    """
    if phi.source != ta.group or phi.target != tb.group:
        raise ValueError("phi does not map between the triplets' groups")
    if not is_isomorphism(phi):
        raise ValueError("phi is not an isomorphism")
    sa = star_bicharacter(ta.cocycle)
    sb = star_bicharacter(tb.cocycle)
    gens = ta.group.generators()
    images = [phi(g) for g in gens]
    cocycle_ok = all(
        sa.value(gi, gj) == sb.value(fi, fj)
        for gi, fi in zip(gens, images)
        for gj, fj in zip(gens, images)
    )
    chi_a2 = ta.character.power(2)
    chi_b2 = tb.character.power(2)
    character_ok = all(chi_a2(g) == chi_b2(f) for g, f in zip(gens, images))
    return cocycle_ok, character_ok


@dataclass(frozen=True)
class PiPhi:
    """The basis intertwiner induced by phi.

    Sends the normalized basis unitary of a zero-sum configuration lam to
    the corrector times the normalized unitary of phi o lam, where the
    corrector is the +-1 character mismatch c(h) = chi_a(h) - chi_b(phi h)
    accumulated over the support with gcd(k) exponents.
    """

    ta: Triplet
    tb: Triplet
    phi: AbHom
    weight: Callable[[LatticePoint], int] = gcd2
    order_key: Callable[[LatticePoint], object] = spiral_index

    def char_mismatch(self, h: AbElem) -> Phase:
        return self.ta.character(h) - self.tb.character(self.phi(h))

    def corrector(self, lam: Config) -> Phase:
        total = Phase.ZERO
        for point, value in lam.items():
            total = total + self.char_mismatch(value) * self.weight(point)
        return total

    def term_phase(self, lam: Config) -> Phase:
        image = lam.mapped(self.phi)
        return (
            mu_hat(self.ta.cocycle, lam, self.order_key)
            + self.corrector(lam)
            - mu_hat(self.tb.cocycle, image, self.order_key)
        )

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        if x.cocycle != self.ta.cocycle:
            raise ValueError("element is not over the source triplet")
        if not x.is_zero_sum_supported:
            raise ValueError("the intertwiner acts on zero-sum-supported elements")
        out: dict = {}
        for lam, coeff in x.terms.items():
            key = lam.mapped(self.phi)
            term = coeff * _zeta(self.term_phase(lam))
            out[key] = out[key] + term if key in out else term
        return AlgebraElement(self.tb.cocycle, out)


def build_pi(ta: Triplet, tb: Triplet, phi: AbHom) -> PiPhi:
    cocycle_ok, character_ok = check_conditions(ta, tb, phi)
    if not (cocycle_ok and character_ok):
        raise ValueError(
            f"conditions fail for phi: cocycle={cocycle_ok} character={character_ok}"
        )
    return PiPhi(ta, tb, phi)


CANONICAL_MOVES = (
    AffineSL2(E1, IDENTITY_MAT),
    AffineSL2(E2, IDENTITY_MAT),
    DELTA,
    XI,
    ETA,
)


@dataclass
class VerifyReport:
    ok: bool
    failures: list = field(default_factory=list)


def verify_pi(
    pi: PiPhi,
    pairs: Sequence[tuple],
    moves: Sequence[AffineSL2] = CANONICAL_MOVES,
) -> VerifyReport:
    """Exact checks that pi intertwines: products, star, trace, equivariance."""
    report = VerifyReport(True)
    for a, b in pairs:
        if pi(a * b) != pi(a) * pi(b):
            report.ok = False
            report.failures.append(("product", a, b))
        if pi(a.star()) != pi(a).star():
            report.ok = False
            report.failures.append(("star", a))
        if pi(a).trace() != a.trace():
            report.ok = False
            report.failures.append(("trace", a))
        for move in moves:
            lhs = pi(beta(pi.ta, move, a))
            rhs = beta(pi.tb, move, pi(a))
            if lhs != rhs:
                report.ok = False
                report.failures.append(("equivariance", move, a))
    return report


@dataclass(frozen=True)
class ConjugacyReport:
    verdict: str  # YES | NO | UNKNOWN
    witness: Optional[AbHom]
    checks: dict
    complete: bool
    note: str = ""


def _lattice_det_value(mu) -> Optional[Phase]:
    """For a bilinear cocycle on Z^2, the star form value at (e1, e2)."""
    if not isinstance(mu, BilinearCocycle):
        return None
    g = mu.group
    if g.free_rank != 2 or g.torsion:
        return None
    gens = g.generators()
    return star_bicharacter(mu).value(gens[0], gens[1])


def decide_conjugacy(ta: Triplet, tb: Triplet, bound: Optional[int] = None) -> ConjugacyReport:
    """Decide conjugacy of the two shift actions at the triplet level.

    Finite groups are decided completely by enumeration.  The rank-two
    lattice case with bilinear cocycles has a complete closed form for the
    cocycle condition (pullback flips the star value by the determinant,
    so only +-v is reachable); it decides NO outright and YES whenever an
    explicit witness (identity or a reflection) settles the character
    condition too.  Anything else falls back to a bounded search and may
    return UNKNOWN.
    """
    ga, gb = ta.group, tb.group
    if not abstractly_isomorphic(ga, gb):
        return ConjugacyReport("NO", None, {"cocycle": False, "character": False}, True,
                               "groups are not isomorphic")
    if ga.is_finite and gb.is_finite:
        isos, complete = enumerate_isomorphisms(ga, gb)
        assert complete
        seen = {"cocycle": False, "character": False}
        for phi in isos:
            c_ok, x_ok = check_conditions(ta, tb, phi)
            seen["cocycle"] = seen["cocycle"] or c_ok
            seen["character"] = seen["character"] or x_ok
            if c_ok and x_ok:
                return ConjugacyReport("YES", phi, {"cocycle": True, "character": True}, True)
        return ConjugacyReport("NO", None, seen, True)

    va = _lattice_det_value(ta.cocycle)
    vb = _lattice_det_value(tb.cocycle)
    if va is not None and vb is not None:
        chi_a2 = ta.character.power(2)
        chi_b2 = tb.character.power(2)
        if va != vb and va != -vb:
            return ConjugacyReport(
                "NO", None, {"cocycle": False, "character": False}, True,
                "star values differ by more than a sign",
            )
        if va == vb and chi_a2.phases == chi_b2.phases:
            phi = AbHom.identity(ga)
            return ConjugacyReport("YES", phi, {"cocycle": True, "character": True}, True)
        if va == -vb and chi_a2.is_trivial and chi_b2.is_trivial:
            phi = AbHom(ga, gb, ((1, 0), (0, -1)))
            c_ok, x_ok = check_conditions(ta, tb, phi)
            if c_ok and x_ok:
                return ConjugacyReport("YES", phi, {"cocycle": True, "character": True}, True)

    if bound is None:
        return ConjugacyReport(
            "UNKNOWN", None, {"cocycle": False, "character": False}, False,
            "free parts present and no search bound given",
        )
    isos, _ = enumerate_isomorphisms(ga, gb, bound)
    seen = {"cocycle": False, "character": False}
    for phi in isos:
        c_ok, x_ok = check_conditions(ta, tb, phi)
        seen["cocycle"] = seen["cocycle"] or c_ok
        seen["character"] = seen["character"] or x_ok
        if c_ok and x_ok:
            return ConjugacyReport("YES", phi, {"cocycle": True, "character": True}, False)
    return ConjugacyReport("UNKNOWN", None, seen, False,
                           f"no witness with entries bounded by {bound}")


@dataclass(frozen=True)
class CentralizerReport:
    verdict: str  # OK | UNKNOWN | INFINITE
    elements: tuple
    structure: Optional[StructureReport]
    complete: bool
    note: str = ""


def centralizer(t: Triplet, bound: Optional[int] = None) -> CentralizerReport:
    """Automorphisms of H preserving the star bicharacter and squared character.

    Finite groups: complete backtracking search over generator images with
    both conditions used for pruning (they are bilinear/linear, so checking
    generators is enough).  Rank-two lattice groups with bilinear cocycle
    and trivial squared character are provably infinite (every determinant
    +-1 matrix that the star value allows qualifies).  Otherwise a bounded,
    explicitly incomplete search is performed when a bound is given.
    """
    group = t.group
    star = star_bicharacter(t.cocycle)
    chi2 = t.character.power(2)
    gens = group.generators()

    if group.is_finite:
        pools: List[List[AbElem]] = []
        for j, g in enumerate(gens):
            n = group.generator_order(j)
            pool = [
                x
                for x in group.elements()
                if x.order() != 0 and n % x.order() == 0 and chi2(x) == chi2(g)
            ]
            pools.append(pool)
        found: List[AbHom] = []
        chosen: List[AbElem] = []

        def extend(j: int) -> None:
            if j == len(gens):
                f = AbHom.from_images(group, group, chosen)
                if is_isomorphism(f):
                    found.append(f)
                return
            for x in pools[j]:
                if all(
                    star.value(chosen[i], x) == star.value(gens[i], gens[j])
                    for i in range(j)
                ):
                    chosen.append(x)
                    extend(j + 1)
                    chosen.pop()

        extend(0)
        structure = group_structure(found, lambda a, b: a.compose(b))
        return CentralizerReport("OK", tuple(found), structure, True)

    v = _lattice_det_value(t.cocycle)
    if v is not None and chi2.is_trivial:
        family = "GL(2,Z)" if (v + v).is_zero else "SL(2,Z)"
        return CentralizerReport(
            "INFINITE", (), None, True,
            f"every automorphism in {family} preserves the data",
        )
    if bound is None:
        return CentralizerReport(
            "UNKNOWN", (), None, False, "free parts present and no search bound given"
        )
    autos, _ = enumerate_isomorphisms(group, group, bound)
    found = tuple(
        phi for phi in autos if all(check_conditions(t, t, phi))
    )
    return CentralizerReport(
        "OK", found, None, False, f"bounded search with entries up to {bound}"
    )

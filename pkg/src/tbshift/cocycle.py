"""Normalized scalar 2-cocycles on abelian groups and their invariants.

Two storage forms are supported.  A TableCocycle stores every value on a
finite group; a BilinearCocycle stores an exponent matrix B and evaluates
mu(g, h) = sum_ij g_i B_ij h_j, which covers infinite groups and every
bilinear family used in practice.  The star bicharacter
mu(g, h) - mu(h, g) classifies a cocycle up to coboundary; that fact is
cross-checked at test scale by an independent linear-algebra witness
solver rather than assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .abelian import AbElem, AbGroup
from .linalg import (
    primitive_integer_vector,
    rational_kernel_basis,
    solve_congruence,
)
from .scalars import Phase


class CocycleError(ValueError):
    def __init__(self, violation: str, detail: str = ""):
        self.violation = violation
        super().__init__(f"{violation}: {detail}" if detail else violation)


@dataclass(frozen=True)
class BilinearCocycle:
    """Cocycle mu(g, h) = sum_ij g_i * B_ij * h_j with Phase entries B_ij.

    Any bilinear exponent form is automatically a normalized 2-cocycle; the
    constructor only has to check that entries touching torsion generators
    are killed by the generator orders, so values are well defined on
    reduced coordinates.
    """

    group: AbGroup
    matrix: tuple  # rank x rank Phases

    def __post_init__(self) -> None:
        r = self.group.rank
        rows = tuple(tuple(row) for row in self.matrix)
        if len(rows) != r or any(len(row) != r for row in rows):
            raise CocycleError("shape", f"matrix must be {r}x{r}")
        object.__setattr__(self, "matrix", rows)
        for i in range(r):
            for j in range(r):
                for n in (self.group.generator_order(i), self.group.generator_order(j)):
                    if n and not (rows[i][j] * n).is_zero:
                        raise CocycleError(
                            "torsion", f"entry ({i},{j}) not killed by order {n}"
                        )

    def __call__(self, g: AbElem, h: AbElem) -> Phase:
        total = Fraction(0)
        for i, gi in enumerate(g.coords):
            if gi:
                row = self.matrix[i]
                for j, hj in enumerate(h.coords):
                    if hj:
                        p = row[j]
                        total += Fraction(gi * p.num * hj, p.den)
        return Phase.from_fraction(total)

    def validate(self) -> None:
        """Construction already enforces everything; kept for surface parity."""


@dataclass(frozen=True, eq=False)
class TableCocycle:
    """Complete value table on a finite group."""

    group: AbGroup
    entries: dict  # (coords, coords) -> Phase

    def __post_init__(self) -> None:
        if not self.group.is_finite:
            raise CocycleError("table", "table form needs a finite group")

    def __call__(self, g: AbElem, h: AbElem) -> Phase:
        return self.entries[(g.coords, h.coords)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TableCocycle):
            return NotImplemented
        return self.group == other.group and self.entries == other.entries

    def validate(self) -> None:
        g_all = list(self.group.elements())
        for g in g_all:
            for h in g_all:
                if (g.coords, h.coords) not in self.entries:
                    raise CocycleError("table", f"missing entry ({g.coords}, {h.coords})")
        zero = self.group.zero()
        for g in g_all:
            if not self(g, zero).is_zero or not self(zero, g).is_zero:
                raise CocycleError("normalization", f"value at ({g.coords}, 0) is not 1")
        for g in g_all:
            for h in g_all:
                for k in g_all:
                    lhs = self(g, h) + self(g + h, k)
                    rhs = self(h, k) + self(g, h + k)
                    if lhs != rhs:
                        raise CocycleError(
                            "cocycle-identity",
                            f"fails at {(g.coords, h.coords, k.coords)}",
                        )


def trivial_cocycle(group: AbGroup) -> BilinearCocycle:
    r = group.rank
    return BilinearCocycle(group, tuple(tuple(Phase.ZERO for _ in range(r)) for _ in range(r)))


def table_from_function(group: AbGroup, fn) -> TableCocycle:
    elems = list(group.elements())
    entries = {(g.coords, h.coords): fn(g, h) for g in elems for h in elems}
    return TableCocycle(group, entries)


def to_table(mu) -> TableCocycle:
    return table_from_function(mu.group, lambda g, h: mu(g, h))


def coboundary_cocycle(group: AbGroup, b: dict) -> TableCocycle:
    """The coboundary (g, h) -> b(g) + b(h) - b(g+h) of a phase map b on G."""

    def value(g: AbElem, h: AbElem) -> Phase:
        return b[g] + b[h] - b[g + h]

    if group.zero() not in b or not b[group.zero()].is_zero:
        b = dict(b)
        b[group.zero()] = Phase.ZERO
    return table_from_function(group, value)


def bilinear_fit(mu) -> Optional[BilinearCocycle]:
    """Bilinear form agreeing with a finite-group cocycle, if one exists."""
    group = mu.group
    gens = group.generators()
    matrix = tuple(tuple(mu(gi, gj) for gj in gens) for gi in gens)
    try:
        fit = BilinearCocycle(group, matrix)
    except CocycleError:
        return None
    for g in group.elements():
        for h in group.elements():
            if fit(g, h) != mu(g, h):
                return None
    return fit


@dataclass(frozen=True)
class Bicharacter:
    """Map (g, h) -> sum_ij g_i M_ij h_j, multiplicative in each slot."""

    group: AbGroup
    matrix: tuple
    antisymmetric: bool = False

    def value(self, g: AbElem, h: AbElem) -> Phase:
        total = Fraction(0)
        for i, gi in enumerate(g.coords):
            if gi:
                for j, hj in enumerate(h.coords):
                    if hj:
                        p = self.matrix[i][j]
                        total += Fraction(gi * p.num * hj, p.den)
        return Phase.from_fraction(total)


def star_bicharacter(mu) -> Bicharacter:
    """The bicharacter (g, h) -> mu(g, h) - mu(h, g).

    Being a bicharacter, it is determined by its values on generator pairs,
    so one matrix suffices for either storage form.
    """
    gens = mu.group.generators()
    matrix = tuple(
        tuple(mu(gi, gj) - mu(gj, gi) for gj in gens) for gi in gens
    )
    return Bicharacter(mu.group, matrix, antisymmetric=True)


def cohomologous(mu1, mu2) -> bool:
    """True iff the two cocycles differ by a coboundary (equal star forms)."""
    if mu1.group != mu2.group:
        raise CocycleError("group", "cocycles live on different groups")
    return star_bicharacter(mu1).matrix == star_bicharacter(mu2).matrix


MAX_WITNESS_ORDER = 64


def coboundary_witness(mu1, mu2) -> Optional[dict]:
    """A map b with mu1(g,h) - mu2(g,h) = b(g) + b(h) - b(g+h), or None.

    Independent of the star-form criterion: the defining equations are
    solved literally, as a linear congruence system over Z/M for a modulus
    M large enough to carry any solution (lcm of the value denominators
    times the group exponent).  For test-scale finite groups only.
    """
    group = mu1.group
    if group != mu2.group:
        raise CocycleError("group", "cocycles live on different groups")
    if not group.is_finite or group.order() > MAX_WITNESS_ORDER:
        raise CocycleError("scale", f"witness solver is limited to order <= {MAX_WITNESS_ORDER}")
    elems = sorted(group.elements(), key=lambda e: e.coords)
    nonzero = [e for e in elems if not e.is_zero]
    index = {e: i for i, e in enumerate(nonzero)}

    def nu(g: AbElem, h: AbElem) -> Phase:
        return mu1(g, h) - mu2(g, h)

    # a coboundary is symmetric in (g, h); cheap necessary precheck
    for g, h in itertools.combinations(nonzero, 2):
        if nu(g, h) != nu(h, g):
            return None

    modulus = 1
    rows = []
    rhs_phases = []
    for a, g in enumerate(nonzero):
        for h in nonzero[a:]:
            row = [0] * len(nonzero)
            row[index[g]] += 1
            row[index[h]] += 1
            s = g + h
            if not s.is_zero:
                row[index[s]] -= 1
            value = nu(g, h)
            rows.append(row)
            rhs_phases.append(value)
            modulus = modulus * value.den // _gcd(modulus, value.den)
    modulus *= group.exponent()
    rhs = [p.num * (modulus // p.den) for p in rhs_phases]
    solution = solve_congruence(rows, rhs, modulus)
    if solution is None:
        return None
    witness = {group.zero(): Phase.ZERO}
    for e, i in index.items():
        witness[e] = Phase(solution[i], modulus)
    for g in elems:
        for h in elems:
            if witness[g] + witness[h] - witness[g + h] != nu(g, h):
                return None
    return witness


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def degeneracy_witness(mu) -> Optional[AbElem]:
    """A nonzero g whose star pairing against every h vanishes, or None.

    Finite groups are checked exhaustively against the generator pairings
    (a character vanishing on generators vanishes everywhere).  On groups
    with a free part the bilinear phases are read as rational tags for a
    dense parameter family, so infinite-order directions are tested for
    generic degeneracy (a rational kernel vector of the pairing matrix),
    while the torsion subgroup is still checked exactly.
    """
    group = mu.group
    star = star_bicharacter(mu)
    gens = group.generators()
    if group.is_finite:
        for g in group.elements():
            if g.is_zero:
                continue
            if all(star.value(g, e).is_zero for e in gens):
                return g
        return None
    rational = [
        [Fraction(p.num, p.den) for p in row] for row in star.matrix
    ]
    transposed = [[rational[i][j] for i in range(group.rank)] for j in range(group.rank)]
    for vec in rational_kernel_basis(transposed):
        if any(vec):
            return group.element(primitive_integer_vector(vec))
    if group.torsion:
        for tors in itertools.product(*(range(n) for n in group.torsion)):
            if not any(tors):
                continue
            g = group.element((0,) * group.free_rank + tors)
            if all(star.value(g, e).is_zero for e in gens):
                return g
    return None


def is_nondegenerate(mu) -> bool:
    return degeneracy_witness(mu) is None

"""Exact twisted group-algebra arithmetic.

AlgebraElement is a finite formal sum of basis unitaries u(config) with
Cyclotomic coefficients, multiplied through the sitewise cocycle pairing.
TensorElement covers the two-leg algebra used by the malleability flow.
Zero coefficients are pruned eagerly so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Dict, Tuple

from .abelian import AbElem, Character
from .cocycle import degeneracy_witness
from .configs import Config, mu_tilde
from .scalars import Cyclotomic, Phase


def _zeta(p: Phase) -> Cyclotomic:
    return Cyclotomic.from_phase(p)


class AlgebraElement:
    """Finite formal sum sum_lambda c(lambda) u(lambda) over a cocycle base."""

    __slots__ = ("cocycle", "terms")

    def __init__(self, cocycle, terms: Dict[Config, Cyclotomic]):
        self.cocycle = cocycle
        self.terms = {k: v for k, v in terms.items() if not v.is_zero}

    @property
    def group(self):
        return self.cocycle.group

    @staticmethod
    def zero(cocycle) -> "AlgebraElement":
        return AlgebraElement(cocycle, {})

    @staticmethod
    def unit(cocycle, config: Config, coeff=Cyclotomic.ONE) -> "AlgebraElement":
        return AlgebraElement(cocycle, {config: coeff})

    @staticmethod
    def one(cocycle) -> "AlgebraElement":
        return AlgebraElement.unit(cocycle, Config.zero(cocycle.group))

    def _check(self, other: "AlgebraElement") -> None:
        if self.cocycle != other.cocycle:
            raise ValueError("elements over different bases")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.cocycle != other.cocycle or self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[k] == v for k, v in self.terms.items())

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return AlgebraElement(self.cocycle, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.cocycle, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scaled(self, c) -> "AlgebraElement":
        if isinstance(c, (int, Fraction)):
            c = Cyclotomic.from_rational(c)
        return AlgebraElement(self.cocycle, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        self._check(other)
        mu = self.cocycle
        out: Dict[Config, Cyclotomic] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                # u(l1) u(l2) = mu~(l1, l2) u(l1 + l2)
                key = k1 + k2
                coeff = v1 * v2 * _zeta(mu_tilde(mu, k1, k2))
                out[key] = out[key] + coeff if key in out else coeff
        return AlgebraElement(self.cocycle, out)

    __rmul__ = scaled

    def star(self) -> "AlgebraElement":
        """Adjoint: u(l)* = conj(mu~(l, -l)) u(-l), coefficients conjugated."""
        mu = self.cocycle
        out: Dict[Config, Cyclotomic] = {}
        for k, v in self.terms.items():
            nk = -k
            coeff = v.conjugate() * _zeta(-mu_tilde(mu, k, nk))
            out[nk] = out[nk] + coeff if nk in out else coeff
        return AlgebraElement(self.cocycle, out)

    def trace(self) -> Cyclotomic:
        """Coefficient at the zero configuration."""
        return self.terms.get(Config.zero(self.group), Cyclotomic.ZERO)

    def restrict_zero_sum(self) -> "AlgebraElement":
        """Conditional expectation: drop every non-zero-sum term."""
        return AlgebraElement(
            self.cocycle, {k: v for k, v in self.terms.items() if k.is_zero_sum}
        )

    @property
    def is_zero_sum_supported(self) -> bool:
        return all(k.is_zero_sum for k in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        return f"AlgebraElement({len(self.terms)} terms)"


class TensorElement:
    """Finite formal sum over pairs (g, g') of u_g (x) u_g' with one cocycle."""

    __slots__ = ("cocycle", "terms")

    def __init__(self, cocycle, terms: Dict[Tuple[AbElem, AbElem], Cyclotomic]):
        self.cocycle = cocycle
        self.terms = {k: v for k, v in terms.items() if not v.is_zero}

    @property
    def group(self):
        return self.cocycle.group

    @staticmethod
    def zero(cocycle) -> "TensorElement":
        return TensorElement(cocycle, {})

    @staticmethod
    def unit(cocycle, g: AbElem, h: AbElem, coeff=Cyclotomic.ONE) -> "TensorElement":
        return TensorElement(cocycle, {(g, h): coeff})

    @staticmethod
    def one(cocycle) -> "TensorElement":
        zero = cocycle.group.zero()
        return TensorElement.unit(cocycle, zero, zero)

    def _check(self, other: "TensorElement") -> None:
        if self.cocycle != other.cocycle:
            raise ValueError("elements over different bases")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.cocycle != other.cocycle or self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[k] == v for k, v in self.terms.items())

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return TensorElement(self.cocycle, out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.cocycle, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scaled(self, c) -> "TensorElement":
        if isinstance(c, (int, Fraction)):
            c = Cyclotomic.from_rational(c)
        return TensorElement(self.cocycle, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        self._check(other)
        mu = self.cocycle
        out: Dict[Tuple[AbElem, AbElem], Cyclotomic] = {}
        for (g1, h1), v1 in self.terms.items():
            for (g2, h2), v2 in other.terms.items():
                key = (g1 + g2, h1 + h2)
                coeff = v1 * v2 * _zeta(mu(g1, g2) + mu(h1, h2))
                out[key] = out[key] + coeff if key in out else coeff
        return TensorElement(self.cocycle, out)

    __rmul__ = scaled

    def star(self) -> "TensorElement":
        mu = self.cocycle
        out: Dict[Tuple[AbElem, AbElem], Cyclotomic] = {}
        for (g, h), v in self.terms.items():
            key = (-g, -h)
            coeff = v.conjugate() * _zeta(-(mu(g, -g) + mu(h, -h)))
            out[key] = out[key] + coeff if key in out else coeff
        return TensorElement(self.cocycle, out)

    def trace(self) -> Cyclotomic:
        zero = self.group.zero()
        return self.terms.get((zero, zero), Cyclotomic.ZERO)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        return f"TensorElement({len(self.terms)} terms)"


def first_leg(cocycle, x_terms: Dict[AbElem, Cyclotomic]) -> TensorElement:
    """Embed sum c_g u_g as sum c_g (u_g (x) 1)."""
    zero = cocycle.group.zero()
    return TensorElement(cocycle, {(g, zero): c for g, c in x_terms.items()})


def second_leg(cocycle, x_terms: Dict[AbElem, Cyclotomic]) -> TensorElement:
    zero = cocycle.group.zero()
    return TensorElement(cocycle, {(zero, g): c for g, c in x_terms.items()})


def malleability_unitary(mu) -> TensorElement:
    """The scaled symmetric unitary V = sum_h u_h (x) u_h^*.

    V equals |H|^(1/2) times the unit-normalized element; keeping the
    integer scaling avoids the square root in the scalar field.  Requires
    a finite base group and a nondegenerate cocycle.
    """
    group = mu.group
    if not group.is_finite:
        raise ValueError("the malleability unitary needs a finite group")
    witness = degeneracy_witness(mu)
    if witness is not None:
        raise ValueError(
            f"cocycle is degenerate: {witness.coords} pairs trivially with everything"
        )
    terms: Dict[Tuple[AbElem, AbElem], Cyclotomic] = {}
    for h in group.elements():
        terms[(h, -h)] = _zeta(-mu(h, -h))
    return TensorElement(mu, terms)


def flow_unitary(mu, t: Fraction) -> TensorElement:
    """W_t = P_1 + e^{i pi t} P_{-1} with P_{+-1} = (1 +- V/sqrt|H|)/2.

    Exact only when |H| is a perfect square (then 1/sqrt|H| is rational);
    every square base group (Z/q x Z/q and their products) qualifies.
    """
    group = mu.group
    n = group.order()
    s = isqrt(n)
    if s * s != n:
        raise ValueError("exact flow needs |H| to be a perfect square")
    half_turn = Phase.from_fraction(Fraction(t) / 2)
    c = Cyclotomic.from_phase(half_turn)  # e^{i pi t}
    p_coeff = (Cyclotomic.ONE + c) * Fraction(1, 2)
    q_coeff = (Cyclotomic.ONE - c) * Fraction(1, 2)
    v = malleability_unitary(mu)
    return TensorElement.one(mu).scaled(p_coeff) + v.scaled(q_coeff * Fraction(1, s))


def malleability_flow(mu, t: Fraction, x: TensorElement) -> TensorElement:
    """Conjugation by the flow unitary at rational time t."""
    if x.cocycle != mu:
        raise ValueError("element is not over the given base")
    w = flow_unitary(mu, t)
    return w * x * w.star()


def apply_diagonal_character(c: Character, x):
    """Scale each term by c evaluated on the total group content of its key."""
    if isinstance(x, AlgebraElement):
        out = {}
        for k, v in x.terms.items():
            phase = Phase.ZERO
            for _, value in k.items():
                phase = phase + c(value)
            out[k] = v * _zeta(phase)
        return AlgebraElement(x.cocycle, out)
    if isinstance(x, TensorElement):
        out = {}
        for (g, h), v in x.terms.items():
            out[(g, h)] = v * _zeta(c(g) + c(h))
        return TensorElement(x.cocycle, out)
    raise TypeError("expected an AlgebraElement or TensorElement")

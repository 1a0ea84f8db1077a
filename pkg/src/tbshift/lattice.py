"""The lattice Z^2, the functions det and gcd on it, and Z^2 x| SL(2,Z).

All integers are Python ints (arbitrary precision): words in SL(2,Z) grow
entries exponentially and must never overflow.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple


class LatticePoint(NamedTuple):
    q: int
    r: int

    def __add__(self, other: "LatticePoint") -> "LatticePoint":  # type: ignore[override]
        return LatticePoint(self.q + other.q, self.r + other.r)

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.q, -self.r)


ORIGIN = LatticePoint(0, 0)
E1 = LatticePoint(1, 0)
E2 = LatticePoint(0, 1)

Mat2 = tuple  # ((x, y), (z, w)) rows


def det2(k: LatticePoint, k0: LatticePoint) -> int:
    """det((q,r),(q0,r0)) = q*r0 - r*q0."""
    return k.q * k0.r - k.r * k0.q


def gcd2(k: LatticePoint) -> int:
    """gcd of the two entries, with gcd2((0,0)) = 0."""
    return math.gcd(abs(k.q), abs(k.r))


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_det(a: Mat2) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def mat_inv_det1(a: Mat2) -> Mat2:
    return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))


def mat_apply(a: Mat2, k: LatticePoint) -> LatticePoint:
    return LatticePoint(a[0][0] * k.q + a[0][1] * k.r, a[1][0] * k.q + a[1][1] * k.r)


IDENTITY_MAT: Mat2 = ((1, 0), (0, 1))


@dataclass(frozen=True)
class AffineSL2:
    """Element (k, gamma) of Z^2 x| SL(2,Z), acting as k + gamma * point."""

    translation: LatticePoint = ORIGIN
    matrix: Mat2 = IDENTITY_MAT

    def __post_init__(self) -> None:
        if mat_det(self.matrix) != 1:
            raise ValueError(f"matrix {self.matrix} has determinant != 1")
        object.__setattr__(self, "translation", LatticePoint(*self.translation))
        object.__setattr__(
            self, "matrix", tuple(tuple(int(x) for x in row) for row in self.matrix)
        )

    def __mul__(self, other: "AffineSL2") -> "AffineSL2":
        # (k1, g1)(k2, g2) = (k1 + g1*k2, g1*g2)
        return AffineSL2(
            self.translation + mat_apply(self.matrix, other.translation),
            mat_mul(self.matrix, other.matrix),
        )

    def inverse(self) -> "AffineSL2":
        inv = mat_inv_det1(self.matrix)
        return AffineSL2(-mat_apply(inv, self.translation), inv)

    def act(self, k: LatticePoint) -> LatticePoint:
        return self.translation + mat_apply(self.matrix, k)

    @property
    def is_identity(self) -> bool:
        return self.translation == ORIGIN and self.matrix == IDENTITY_MAT


IDENTITY = AffineSL2()

# The three-cycle on {0, e1, e2} and the two named matrices used throughout:
# xi sends 0 -> e1 -> e2 -> 0, eta is central inversion, delta is the
# horizontal shear fixing the axis D = {(n, 0)}.
XI = AffineSL2(E1, ((-1, -1), (1, 0)))
ETA = AffineSL2(ORIGIN, ((-1, 0), (0, -1)))
DELTA = AffineSL2(ORIGIN, ((1, 1), (0, 1)))


def named_elements() -> dict:
    return {"e1": E1, "e2": E2, "xi": XI, "eta": ETA, "delta": DELTA}


def spiral_index(k: LatticePoint) -> int:
    """Position of k in the fixed enumeration of Z^2.

    Ring by ring (Chebyshev norm), counterclockwise; ring R starts just
    above the south-east corner, at (R, 1-R).  The enumeration begins
    (0,0), (1,0), (1,1), (0,1), (-1,1), (-1,0), (-1,-1), (0,-1), (1,-1),
    (2,-1), ...
    """
    q, r = k
    ring = max(abs(q), abs(r))
    if ring == 0:
        return 0
    start = 1 + 4 * ring * (ring - 1)
    if q == ring and r != -ring:
        offset = r - (1 - ring)
    elif r == ring:
        offset = 2 * ring + (ring - 1 - q)
    elif q == -ring:
        offset = 4 * ring + (ring - 1 - r)
    else:  # r == -ring
        offset = 6 * ring + (q - (1 - ring))
    return start + offset


def spiral_points() -> Iterator[LatticePoint]:
    """The enumeration of Z^2 in spiral_index order."""
    yield ORIGIN
    for ring in itertools.count(1):
        for r in range(1 - ring, ring + 1):
            yield LatticePoint(ring, r)
        for q in range(ring - 1, -ring - 1, -1):
            yield LatticePoint(q, ring)
        for r in range(ring - 1, -ring - 1, -1):
            yield LatticePoint(-ring, r)
        for q in range(1 - ring, ring + 1):
            yield LatticePoint(q, -ring)

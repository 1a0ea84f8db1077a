from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tbshift.scalars import Cyclotomic, Phase, cyclotomic_polynomial, euler_phi

phases = st.builds(Phase, st.integers(-60, 60), st.integers(1, 24))


def test_phase_add_examples():
    assert Phase(1, 3) + Phase(2, 3) == Phase.ZERO
    assert Phase(1, 2) + Phase(1, 3) == Phase(5, 6)
    assert Phase.ZERO + Phase(7, 9) == Phase(7, 9)


def test_phase_scale_examples():
    assert Phase(1, 3) * 3 == Phase.ZERO
    assert Phase(1, 4) * -1 == Phase(3, 4)
    assert Phase(1, 6) * 4 == Phase(2, 3)


def test_phase_normalization():
    assert Phase(5, 3) == Phase(2, 3)
    assert Phase(-1, 4) == Phase(3, 4)
    assert Phase(2, 4) == Phase(1, 2)
    assert str(Phase(0, 7)) == "0/1"


def test_phase_parse_roundtrip():
    for text in ["0/1", "1/2", "7/9", "15/16"]:
        assert str(Phase.parse(text)) == text


@given(phases, phases, phases)
def test_phase_group_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + Phase.ZERO == a
    assert (a + (-a)).is_zero


@given(phases, st.integers(-10, 10))
def test_phase_scaling_is_repeated_addition(a, n):
    total = Phase.ZERO
    for _ in range(abs(n)):
        total = total + a
    if n < 0:
        total = -total
    assert a * n == total


def test_cyclotomic_polynomial_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_euler_phi_values():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_root_of_unity_examples():
    one = Cyclotomic.from_phase(Phase.ZERO)
    assert one.order == 1 and one.coeffs == (Fraction(1),)
    minus = Cyclotomic.from_phase(Phase(1, 2))
    assert minus.order == 2 and minus.coeffs == (Fraction(-1),)
    # zeta_3^2 reduces to -1 - zeta_3 modulo x^2 + x + 1
    z32 = Cyclotomic.from_phase(Phase(2, 3))
    assert z32.coeffs == (Fraction(-1), Fraction(-1))


def test_cyclotomic_ring_examples():
    z3 = Cyclotomic.from_phase(Phase(1, 3))
    z32 = Cyclotomic.from_phase(Phase(2, 3))
    assert z3 * z32 == Cyclotomic.ONE
    assert (Cyclotomic.ONE + z3 + z32).is_zero
    z5 = Cyclotomic.from_phase(Phase(1, 5))
    assert z5.conjugate() == Cyclotomic.from_phase(Phase(4, 5))


def test_rebase_examples():
    z2 = Cyclotomic.from_phase(Phase(1, 2))
    assert z2.rebase(4) == Cyclotomic.from_phase(Phase(2, 4))
    assert Cyclotomic.ONE.rebase(12) == Cyclotomic.ONE
    z3 = Cyclotomic.from_phase(Phase(1, 3))
    assert z3.rebase(6) == Cyclotomic.from_phase(Phase(2, 6))
    with pytest.raises(ValueError):
        z3.rebase(4)


def test_phase_embedding_is_homomorphism_exhaustive():
    # image of phase addition is multiplication, for all denominators <= 24
    for den_a in range(1, 25):
        for num_a in range(den_a):
            a = Phase(num_a, den_a)
            b = Phase(den_a - num_a if num_a else 0, den_a)
            assert Cyclotomic.from_phase(a + b) == Cyclotomic.from_phase(
                a
            ) * Cyclotomic.from_phase(b)
    for den_a, den_b in [(3, 4), (6, 8), (5, 7), (12, 18), (16, 24)]:
        for num_a in range(den_a):
            for num_b in range(den_b):
                a, b = Phase(num_a, den_a), Phase(num_b, den_b)
                lhs = Cyclotomic.from_phase(a + b)
                rhs = Cyclotomic.from_phase(a) * Cyclotomic.from_phase(b)
                assert lhs == rhs


@given(phases)
def test_conjugate_times_self_is_real(a):
    x = Cyclotomic.from_phase(a) + Cyclotomic.from_rational(Fraction(1, 2))
    y = x.conjugate() * x
    assert y.conjugate() == y


@given(phases, phases)
@settings(max_examples=50)
def test_canonical_equality_is_stable(a, b):
    x = Cyclotomic.from_phase(a) * Fraction(3, 7)
    y = Cyclotomic.from_phase(b) * Fraction(-2, 5)
    assert (x + y) - y == x


def test_scalar_multiplication():
    z4 = Cyclotomic.from_phase(Phase(1, 4))
    assert z4 * 2 == z4 + z4
    assert z4 * Fraction(1, 2) + z4 * Fraction(1, 2) == z4
    assert (z4 * 0).is_zero

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topograph import DualInt, DualRat, NotAUnit, analytic_lift

ints = st.integers(min_value=-(10**6), max_value=10**6)
duals = st.builds(DualInt, ints, ints)
units = st.builds(DualInt, st.sampled_from([1, -1]), ints)


class TestRingLaws:
    @given(duals, duals)
    def test_addition_commutes(self, x, y):
        assert x + y == y + x

    @given(duals, duals, duals)
    def test_addition_associates(self, x, y, z):
        assert (x + y) + z == x + (y + z)

    @given(duals, duals)
    def test_multiplication_commutes(self, x, y):
        assert x * y == y * x

    @given(duals, duals, duals)
    def test_multiplication_associates(self, x, y, z):
        assert (x * y) * z == x * (y * z)

    @given(duals, duals, duals)
    def test_distributivity(self, x, y, z):
        assert x * (y + z) == x * y + x * z

    @given(duals)
    def test_identities(self, x):
        assert x + 0 == x
        assert x * 1 == x
        assert x + (-x) == DualInt(0)


def test_componentwise_examples():
    assert DualInt(1, 2) + DualInt(3, 4) == DualInt(4, 6)
    assert DualInt(1, 1) + DualInt(-1, -1) == 0


def test_epsilon_squared_vanishes():
    assert DualInt(1, 1) * DualInt(1, 1) == DualInt(1, 2)
    assert DualInt(0, 5) * DualInt(0, 3) == 0


def test_mul_shadow_markov_root_factor():
    # the product appearing when checking the shadow Markov root triple
    assert DualInt(3, -2) * DualInt(1, 2) == DualInt(3, 4)


def test_pow_matches_mul_chain():
    x = DualInt(2, 1)
    assert x**3 == x * x * x == DualInt(8, 12)
    assert x**0 == 1


class TestUnits:
    def test_is_unit_examples(self):
        assert DualInt(1, 7).is_unit()
        assert DualInt(-1, 3).is_unit()
        assert not DualInt(2, 1).is_unit()
        assert not DualInt(0, 5).is_unit()

    def test_inverse_examples(self):
        assert DualInt(1, 3).inverse() == DualInt(1, -3)
        assert DualInt(-1, 3).inverse() == DualInt(-1, -3)

    @given(units)
    def test_inverse_roundtrip(self, x):
        assert x * x.inverse() == 1

    def test_inverse_of_nonunit_raises(self):
        with pytest.raises(NotAUnit):
            DualInt(2, 1).inverse()

    def test_negative_power_of_unit(self):
        assert DualInt(1, 4) ** -2 == DualInt(1, -8)
        with pytest.raises(NotAUnit):
            DualInt(3, 1) ** -1


class TestAnalyticLift:
    def test_square(self):
        x = DualRat(Fraction(3), Fraction(1))
        assert analytic_lift(9, 6, x) == x * x == DualRat(Fraction(9), Fraction(6))

    def test_identity(self):
        x = DualRat(Fraction(5, 7), Fraction(2, 3))
        assert analytic_lift(x.re, 1, x) == x

    def test_cube_matches_mul_chain(self):
        x = DualRat(Fraction(2), Fraction(1))
        assert analytic_lift(8, 12, x) == x * x * x == DualRat(Fraction(8), Fraction(12))

    @given(st.integers(-50, 50), st.integers(-50, 50))
    def test_polynomial_agreement(self, a, b):
        # f(t) = t^3 - 2t + 5, f'(t) = 3t^2 - 2, lifted vs direct evaluation
        x = DualRat(Fraction(a), Fraction(b))
        direct = x * x * x - 2 * x + 5
        lifted = analytic_lift(a**3 - 2 * a + 5, 3 * a**2 - 2, x)
        assert direct == lifted


def test_text_forms():
    assert str(DualInt(3, -2)) == "3-2ε"
    assert str(DualInt(1, 1)) == "1+ε"
    assert str(DualInt(2, 0)) == "2"
    assert str(DualInt(-1, -1)) == "-1-ε"


def test_json_encoding_uses_decimal_strings():
    big = DualInt(10**40, -(10**41))
    assert big.json_dict() == {"re": str(10**40), "sh": str(-(10**41))}


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        DualInt(1.5, 0)  # type: ignore[arg-type]

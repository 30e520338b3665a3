from fractions import Fraction

import pytest

from core.errors import NotInvertibleError, ValuationError, VariableMismatchError
from models.polynomial import Polynomial
from models.rational_function import RationalFunction

x = Polynomial.gen("x")


def test_trailing_zeros_are_stripped():
    p = Polynomial([1, 2, 0, 0])
    assert p.coefficients == (1, 2)
    assert p.degree == 1
    assert Polynomial([0, 0]).is_zero()


def test_arithmetic_and_evaluation():
    p = (1 + x) ** 3
    assert p.coefficients == (1, 3, 3, 1)
    assert p.evaluate(2) == 27
    assert (p - p).is_zero()
    assert p.derivative() == 3 * (1 + x) ** 2


def test_exact_division():
    quotient, remainder = (x ** 3 - 1).divmod(x - 1)
    assert quotient == x ** 2 + x + 1
    assert remainder.is_zero()
    with pytest.raises(NotInvertibleError):
        (x ** 2 + 1) / (x - 1)


def test_gcd_is_monic():
    left = 2 * (x - 1) * (x + 2)
    right = 3 * (x - 1) * (x + 5)
    assert Polynomial.gcd(left, right) == x - 1


def test_integral_fractions_collapse_to_int():
    p = Polynomial([Fraction(4, 2), Fraction(1, 3)])
    assert isinstance(p.coefficient(0), int)
    assert p.coefficient(1) == Fraction(1, 3)


def test_divide_by_variable_needs_valuation():
    assert (x ** 2 + x).divide_by_variable(1) == x + 1
    with pytest.raises(ValuationError):
        (x + 1).divide_by_variable(1)


def test_mixing_variables_is_refused():
    with pytest.raises(VariableMismatchError):
        x + Polynomial.gen("t")
    # constants may cross variables
    assert x + Polynomial([2], "t") == x + 2


def test_rational_function_reduces():
    f = RationalFunction(x ** 2 - 1, 2 * (x - 1), "x")
    assert f.numerator == Fraction(1, 2) * (x + 1)
    assert f.denominator == Polynomial([1], "x")
    assert f == RationalFunction(x + 1, 2, "x")


def test_rational_function_compose_and_reciprocal():
    f = RationalFunction(x, 1 + x ** 2, "x")
    assert f.reciprocal_substitution() == f
    g = RationalFunction(x + 1, 1, "x")
    assert f.compose(g) == RationalFunction(x + 1, 2 + 2 * x + x ** 2, "x")


def test_rational_function_pole():
    f = RationalFunction(1, x - 1, "x")
    assert f.evaluate(3) == Fraction(1, 2)
    with pytest.raises(NotInvertibleError):
        f.evaluate(1)
    with pytest.raises(NotInvertibleError):
        RationalFunction(1, 0, "x")

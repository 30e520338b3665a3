from fractions import Fraction

import pytest
from mpmath import mpf

from core.errors import DomainError
from generators.classical import solve_classical
from generators.closed_form import (
    G_of_x,
    Gk_closed,
    Gk_product,
    Rk_closed,
    Tk_closed,
    Wk_closed,
    Yk_closed,
    alpha_fixed_point,
    beta_fixed_point,
    check_special_line,
    critical_values,
    factorized_recursion,
    g_of_x,
    h4_of_C,
    homographic_map,
    lambda_map,
    parametrizations,
    phi_of_Y,
    phi_param,
    select_Y,
    t_of_Y,
    t_of_Y_rational,
)
from models.rational_function import RationalFunction
from models.truncated_series import series_compose, series_from_rational, series_revert
from utils.precision import evaluate_mpf


def test_closed_forms_expand_to_the_classical_series():
    order = 20
    x_of_g = series_revert(series_from_rational(g_of_x(), order, "x"), variable="g")
    table = solve_classical(10, order)
    for k in range(1, 11):
        assert series_compose(series_from_rational(Rk_closed(k), order, "x"), x_of_g) == table.R(k)


@pytest.mark.parametrize("k", range(1, 8))
def test_factored_two_point_function(k):
    assert Gk_product(k) == Gk_closed(k)


@pytest.mark.parametrize("k", range(1, 6))
def test_invariance_under_x_to_one_over_x(k):
    assert Rk_closed(k).reciprocal_substitution() == Rk_closed(k)
    assert Gk_closed(k).reciprocal_substitution() == Gk_closed(k)


def test_difference_of_slice_functions():
    assert Rk_closed(0).is_zero()
    for k in range(1, 6):
        assert Tk_closed(k) == Rk_closed(k) - Rk_closed(1)


@pytest.mark.parametrize("k", range(2, 8))
def test_homographic_recursion(k):
    mapping = homographic_map()
    assert mapping.apply(Yk_closed(k - 1)) == Yk_closed(k)
    assert factorized_recursion(k)[1].is_zero()
    assert Wk_closed(k) / Wk_closed(k - 1) == RationalFunction.gen("x")


def test_fixed_points_of_the_homographic_map():
    relations = homographic_map().fixed_point_relations(alpha_fixed_point(), beta_fixed_point())
    assert relations == {"sum": True, "product": True}


def test_special_line_identities():
    report = check_special_line()
    assert report.holds, report.failing()


def test_critical_values():
    assert critical_values() == {"g": Fraction(1, 8), "C": Fraction(1, 2), "G": Fraction(25, 128)}


def test_parametrizations_are_injective():
    for parametrization in parametrizations():
        assert parametrization.is_injective(), parametrization.name
    names = {parametrization.name for parametrization in parametrizations()}
    assert {"x-of-g", "C-of-x", "G-of-C", "t-of-Y", "lambda-map"} <= names


def test_t_of_Y_inverts_the_selected_branch():
    c = Fraction(1, 3)
    assert t_of_Y_rational(c).evaluate(-(c + 1)) == 0
    assert t_of_Y_rational(c).evaluate(Fraction(-1)) == t_of_Y(Fraction(-1), c)
    c_float, t = mpf("0.3"), mpf("0.05")
    assert abs(t_of_Y(select_Y(t, c_float), c_float) - t) < mpf(10) ** -30


def test_lambda_map_is_decreasing_from_one():
    x = Fraction(1, 2)
    assert lambda_map(3, x).evaluate(0) == 1
    assert lambda_map(3, x).evaluate(Fraction(1, 2)) > lambda_map(3, x).evaluate(1)


def test_y_parametrization_poles():
    c = Fraction(1, 3)
    with pytest.raises(DomainError):
        phi_of_Y(-c * c, c)
    with pytest.raises(DomainError):
        phi_of_Y(-c * c * (c + 1), c)
    with pytest.raises(DomainError):
        t_of_Y(0, c)
    with pytest.raises(DomainError):
        lambda_map(0, c)
    assert phi_of_Y(-(c + 1), c) == h4_of_C().evaluate(c)


def test_y_branch_starts_at_minus_c_minus_one():
    c = mpf("0.3")
    assert abs(select_Y(0, c) + c + 1) < mpf(10) ** -30
    assert abs(phi_param(0, c) - evaluate_mpf(h4_of_C(), c)) < mpf(10) ** -30


def test_domain_checks():
    with pytest.raises(DomainError):
        Rk_closed(-1)
    with pytest.raises(DomainError):
        Gk_closed(0)
    with pytest.raises(DomainError):
        factorized_recursion(1)


def test_slice_functions_telescope():
    for k in range(1, 6):
        total = sum((Gk_closed(j) for j in range(1, k + 1)), RationalFunction.constant(1))
        assert total == Rk_closed(k)
        assert Rk_closed(k).evaluate(0) == 1
        assert Gk_closed(k + 1).evaluate(0) == 0


def test_first_homographic_iterate():
    x = RationalFunction.gen("x")
    assert Yk_closed(1) == -(1 + x + x ** 2) / (1 + x ** 2)


def test_rescaled_variable_and_multiplier():
    assert G_of_x() == g_of_x() * Rk_closed(1) ** 2
    multiplier = homographic_map().multiplier(alpha_fixed_point(), beta_fixed_point())
    assert multiplier == RationalFunction.gen("x")

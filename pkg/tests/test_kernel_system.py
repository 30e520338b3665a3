from fractions import Fraction

import pytest

from core.errors import DomainError, ValuationError, VariableMismatchError
from generators.classical import solve_classical
from generators.closed_form import G_of_C, h4_of_C
from generators.kernel_system import (
    face_degree_series,
    iterate_t,
    kernel_apply,
    kernel_coefficients,
    rescaling_series,
    slice_series_via_kernel,
    solve_phi_omega,
    system_residuals,
    to_g_series,
    to_rescaled,
)
from models.truncated_series import TruncatedSeries, series_compose, series_from_rational, series_revert


def test_h4_expansion():
    h4 = solve_phi_omega(10).h4
    assert h4 == TruncatedSeries([0, 1, 0, 1, 3, 9, 31, 114, 435, 1713, 6924], 10, "G")


def test_system_residuals_vanish():
    residuals = system_residuals(solve_phi_omega(6))
    assert all(r.is_zero() for r in residuals.values())


def test_phi_t_degree_is_bounded():
    phi = solve_phi_omega(6).phi
    for n in range(1, 7):
        assert phi.max_t_degree(n) <= n - 1


def test_second_reduced_slice_function():
    t_series = iterate_t(2, 4)
    assert t_series[1].is_zero()
    assert t_series[2] == TruncatedSeries([0, 1, 1, 2, 6], 4, "G")


def test_kernel_route_matches_the_classical_route():
    order = 16
    table = solve_classical(8, order)
    for k, series in slice_series_via_kernel(8, order).items():
        assert series == table.R(k)


def test_rescaling_round_trip():
    assert rescaling_series(4) == TruncatedSeries([0, 1, 2, 7, 30], 4)
    series = TruncatedSeries([0, 1, 5, -2, 3], 4, "G")
    assert to_rescaled(to_g_series(series)).coefficients == series.coefficients


def test_kernel_coefficients_are_non_negative():
    kernel = kernel_coefficients(6, 4)
    assert kernel.negative_entries() == []
    # K(0) = t_2 in the unrescaled variable
    assert kernel.coefficients[0].coefficient(1) == 1


def test_kernel_argument_checks():
    phi = solve_phi_omega(3).phi
    with pytest.raises(VariableMismatchError):
        kernel_apply(phi, TruncatedSeries([0, 1], 3, "g"))
    with pytest.raises(ValuationError):
        kernel_apply(phi, TruncatedSeries([1, 1], 3, "G"))
    with pytest.raises(DomainError):
        solve_phi_omega(0)


def test_omega_starts_at_second_order():
    omega_at_zero = solve_phi_omega(4).omega.at_t_zero()
    assert omega_at_zero.coefficient(1) == 0
    assert omega_at_zero.coefficient(2) == 1


@pytest.mark.parametrize("i", [2, 3])
def test_face_degree_series_shifts_the_kernel(i):
    order = 6
    faces = face_degree_series(order, i)
    kernel = kernel_coefficients(order, 4).coefficients[i - 1]
    assert faces.coefficient(0) == 0
    for n in range(1, order + 1):
        assert faces.coefficient(n) == kernel.coefficient(n - 1)


def test_h4_matches_its_parametric_form():
    order = 10
    c_of_g = series_revert(series_from_rational(G_of_C(), order, "C"), variable="G")
    h4_from_c = series_compose(series_from_rational(h4_of_C(), order, "C"), c_of_g)
    assert h4_from_c == solve_phi_omega(order).h4


def test_counting_series_have_non_negative_integer_coefficients():
    order = 6
    solution = solve_phi_omega(order)
    for bivariate in (solution.phi, solution.omega):
        for n in range(order + 1):
            for j in range(bivariate.max_t_degree(n) + 1):
                value = Fraction(bivariate.coefficient(n, j))
                assert value.denominator == 1 and value >= 0, (n, j, value)
    for i in (2, 3, 4):
        for value in face_degree_series(order, i).coefficients:
            assert Fraction(value).denominator == 1 and value >= 0

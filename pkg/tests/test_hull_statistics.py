import math
from fractions import Fraction

import numpy as np
import pytest
from mpmath import mpf, sqrt

from core.errors import DomainError
from utils.hull_statistics import (
    A_coefficient,
    E_inf_alpha,
    E_inf_mean,
    E_k_alpha,
    E_k_distribution,
    E_k_mean,
    E_k_mean_from_expansion,
    E_k_mean_limit,
    density_limit,
    density_moments,
    laplace_functional,
    laplace_limit,
    mean_profile,
    p_inf,
    p_inf_table,
    perimeter_normalization,
    rescaled_distribution,
    scaled_A_table,
)


def test_first_perimeter_probability():
    assert p_inf(2, 1) == Fraction(28, 45)
    assert p_inf_table(2, 1).probabilities[1] == pytest.approx(28 / 45, rel=1e-14)


def test_a_coefficients():
    assert [A_coefficient(p) for p in (1, 2, 3)] == [1, 7, 53]
    exact = np.array([0.0] + [A_coefficient(p) / 9 ** p for p in range(1, 16)])
    assert np.allclose(scaled_A_table(15), exact, rtol=1e-12, atol=0)


@pytest.mark.parametrize("d", [2, 3, 7])
def test_float_table_matches_exact_values(d):
    table = p_inf_table(d, 12)
    for p, value in table.rows():
        assert value == pytest.approx(float(p_inf(d, p)), rel=1e-12)


@pytest.mark.parametrize("d", [2, 5, 10, 20])
def test_normalization(d):
    assert perimeter_normalization(d, 4000) == pytest.approx(1, abs=1e-9)


def test_mean_at_k_infinity():
    assert E_inf_mean(2) == Fraction(105, 32)
    table = p_inf_table(2, 300)
    assert sum(2 * p * prob for p, prob in table.rows()) == pytest.approx(105 / 32, rel=1e-10)
    assert E_k_mean_limit(2) == E_inf_mean(2)


@pytest.mark.parametrize("d", [2, 4, 9])
def test_generating_function_at_the_ends(d):
    assert float(E_inf_alpha(1, d)) == pytest.approx(1, abs=1e-30)
    assert float(E_inf_alpha(0, d)) == pytest.approx(0, abs=1e-30)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_finite_k_mean_from_two_routes(k):
    assert E_k_mean_from_expansion(k, 2) == E_k_mean(k, 2)


def test_finite_k_mean_tends_to_the_limit():
    gap_small = abs(E_k_mean(20, 2) - E_inf_mean(2))
    gap_large = abs(E_k_mean(200, 2) - E_inf_mean(2))
    assert gap_large < gap_small


def test_finite_k_distribution():
    distribution = E_k_distribution(4, 2, 6)
    assert all(isinstance(v, Fraction) and v >= 0 for v in distribution.probabilities.values())
    assert 0 <= distribution.tail_mass <= 1
    assert float(E_k_alpha(4, 2, 1)) == pytest.approx(1, abs=1e-20)


def test_scaling_functions():
    assert mean_profile(0.5) == pytest.approx(0.5478515625)
    assert laplace_limit(0) == 1
    assert density_limit(-1) == 0
    moments = density_moments()
    assert moments["mass"] == pytest.approx(1, abs=1e-9)
    assert moments["mean"] == pytest.approx(0.375, abs=1e-9)
    assert moments["laplace_at_1"] == pytest.approx(laplace_limit(1), abs=1e-9)


@pytest.mark.parametrize("tau", [0.5, 1.0, 2.0])
def test_laplace_functional_approaches_the_limit(tau):
    assert abs(float(laplace_functional(tau, 200)) - laplace_limit(tau)) < 2e-2


def test_rescaled_distribution():
    rows = rescaled_distribution(10, 5)
    assert rows[0][0] == pytest.approx(2 / 100)
    assert rows[0][1] == pytest.approx(50 * p_inf_table(10, 1).probabilities[1])


def test_range_checks():
    with pytest.raises(DomainError):
        p_inf(1, 1)
    with pytest.raises(DomainError):
        E_k_mean(3, 3)
    with pytest.raises(DomainError):
        A_coefficient(0)
    with pytest.raises(DomainError):
        mean_profile(1.5)
    assert math.isinf(p_inf_table(3, 2).k)


def test_mean_is_the_derivative_at_one():
    h = mpf(10) ** -12
    slope = (E_inf_alpha(1, 3) - E_inf_alpha(1 - h, 3)) / h
    assert float(slope) == pytest.approx(float(E_inf_mean(3)), rel=1e-6)


def test_mean_grows_like_three_eighths_d_squared():
    ratios = [float(E_inf_mean(d)) / d ** 2 for d in (10, 100, 1000)]
    assert abs(ratios[2] - 0.375) < abs(ratios[0] - 0.375)
    assert ratios[2] == pytest.approx(0.375, rel=1e-2)


def test_d_two_has_a_constant_second_radical():
    a = mpf("0.25")
    expected = sqrt((15 * (9 - a) + 8 * a) / (15 * (1 - a) + 8 * a)) - 3
    assert abs(E_inf_alpha(mpf("0.5"), 2) - expected) < mpf(10) ** -40


def test_mean_profile_vanishes_at_u_one():
    assert mean_profile(1) == 0
    assert mean_profile(0) == pytest.approx(0.375)


def test_tail_bound():
    table = p_inf_table(10, 200)
    assert 0 < table.tail_bound < 1e-3
    assert abs(table.tail_bound - table.tail_mass) < 1e-4
    assert math.isinf(p_inf_table(10, 1).tail_bound)


def test_laplace_error_shrinks_with_d():
    errors = [abs(float(laplace_functional(1.0, d)) - laplace_limit(1.0)) for d in (50, 400)]
    assert errors[1] < errors[0]


def test_finite_k_mean_follows_the_profile():
    assert float(E_k_mean(2000, 1000)) / 1e6 == pytest.approx(float(mean_profile(0.5)), rel=1e-2)

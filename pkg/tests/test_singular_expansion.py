from fractions import Fraction

import pytest

from core.errors import DomainError, SingularExpansionError
from generators.closed_form import Gk_closed, R_infinity_closed, g_of_x
from models.truncated_series import TruncatedSeries
from utils.singular_expansion import (
    EpsilonFrame,
    check_even_expansion,
    hull_epsilon_series,
    hull_singular_coefficient,
    singular_coeff,
    two_point_singular_coefficient,
)


def test_g_has_no_singular_part():
    assert singular_coeff(g_of_x()) == 0


def test_square_root_singularity_is_rejected():
    # R_inf = 2/(1 + eps^2) carries an eps^2 term
    with pytest.raises(SingularExpansionError):
        singular_coeff(R_infinity_closed())


@pytest.mark.parametrize("k", range(1, 6))
def test_two_point_amplitudes(k):
    value = two_point_singular_coefficient(k)
    assert isinstance(value, (int, Fraction))
    assert value != 0


def test_odd_terms_are_rejected():
    with pytest.raises(SingularExpansionError):
        check_even_expansion(TruncatedSeries([1, 0, 0, 1], 6, "eps"), "odd")
    with pytest.raises(SingularExpansionError):
        check_even_expansion(TruncatedSeries([1, 0, 1], 6, "eps"), "square")
    check_even_expansion(TruncatedSeries([1, 0, 0, 0, 2, 0, 3], 6, "eps"), "even")


def test_order_must_reach_the_singular_power():
    with pytest.raises(DomainError):
        singular_coeff(g_of_x(), 4)


def test_frame_helpers():
    frame = EpsilonFrame(6)
    assert frame.e(3).coefficient(0) == 6
    assert frame.x_power(0) == 1


@pytest.mark.parametrize("k, d", [(3, 2), (5, 2), (5, 4)])
def test_hull_amplitude_at_alpha_one_and_zero(k, d):
    assert hull_singular_coefficient(k, d, 1) == two_point_singular_coefficient(k)
    assert hull_singular_coefficient(k, d, 0) == 0


def test_hull_series_at_d_one_is_the_two_point_function():
    series = hull_epsilon_series(4, 1, 1)
    assert series.coefficient(6) == singular_coeff(Gk_closed(4))
    with pytest.raises(DomainError):
        hull_epsilon_series(4, 4, 1)

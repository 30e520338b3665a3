import pytest

from core.errors import DomainError
from generators.classical import SWEEP_SCHEDULES, r_infinity_series, solve_classical, two_point_series
from models.truncated_series import TruncatedSeries


def test_r1_counts():
    table = solve_classical(4, 4)
    assert table.R(1) == TruncatedSeries([1, 1, 3, 12, 56], 4)


def test_r_infinity():
    assert r_infinity_series(4) == TruncatedSeries([1, 2, 8, 40, 224], 4)


def test_r0_is_zero():
    assert solve_classical(2, 3).R(0).is_zero()


def test_first_two_point_functions():
    assert two_point_series(1, 4) == TruncatedSeries([0, 1, 3, 12, 56], 4)
    assert two_point_series(2, 2) == TruncatedSeries([0, 1, 4], 2)


def test_invariants_hold():
    assert solve_classical(8, 6).check_invariants() == []


def test_stabilizes_beyond_the_order():
    table = solve_classical(10, 5)
    for k in range(6, 11):
        assert table.R(k) == table.r_infinity
    # R_k only reaches R_inf at g^k
    assert table.R(5).coefficient(5) != table.r_infinity.coefficient(5)


@pytest.mark.parametrize("sweep", SWEEP_SCHEDULES)
def test_sweeps_agree(sweep):
    reference = solve_classical(6, 6, "jacobi")
    other = solve_classical(6, 6, sweep)
    assert all(other.R(k) == reference.R(k) for k in range(1, 7))


@pytest.mark.parametrize("kmax, order, sweep", [(0, 3, "jacobi"), (2, -1, "jacobi"), (2, 3, "random")])
def test_rejects_bad_arguments(kmax, order, sweep):
    with pytest.raises(DomainError):
        solve_classical(kmax, order, sweep)


def test_out_of_range_lookups():
    table = solve_classical(3, 3)
    with pytest.raises(DomainError):
        table.R(4)
    with pytest.raises(DomainError):
        table.two_point(0)
    with pytest.raises(DomainError):
        two_point_series(0, 3)

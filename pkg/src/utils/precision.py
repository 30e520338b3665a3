"""
Helpers for moving exact quantities into mpmath at a controlled precision
"""

from contextlib import contextmanager
from typing import Any, Iterator

from mpmath import mp, mpmathify

from core.errors import DomainError
from models.rational_function import RationalFunction
from models.truncated_series import TruncatedSeries


def to_mpf(value: Any) -> Any:
    """mpmath number from an int, Fraction, float, string or mpmath number"""
    return mpmathify(value)


def evaluate_mpf(function: RationalFunction, point: Any) -> Any:
    """Evaluate an exact rational function at a high-precision point"""
    point = to_mpf(point)
    top = function.numerator.map_coefficients(to_mpf).evaluate(point)
    bottom = function.denominator.map_coefficients(to_mpf).evaluate(point)
    return top / bottom


def series_to_mpf(series: TruncatedSeries) -> TruncatedSeries:
    return series.map_coefficients(to_mpf)


@contextmanager
def working_precision(decimal_digits: int) -> Iterator[int]:
    """mpmath precision inside the block; the previous one is restored on exit"""
    if decimal_digits < 1:
        raise DomainError(f"precision must be >= 1 decimal digit, got {decimal_digits}")
    with mp.workdps(decimal_digits):
        yield decimal_digits

"""
Singular expansion at the critical point g* = 1/8.

Setting g = g*(1 - eps^4) amounts to x = (1 - eps)/(1 + eps). Generating
functions invariant under x -> 1/x expand in even powers of eps, with no
eps^2 term, and their eps^6 coefficient is the amplitude of the
(g* - g)^(3/2) singularity that governs large-map limits.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Optional

from mpmath import mp, mpf, sqrt

from core.errors import DomainError, SingularExpansionError
from generators.closed_form import Gk_closed, one_minus_x_power
from generators.hull_perimeter import amplitude, rho_closed
from models.polynomial import Polynomial
from models.rational_function import RationalFunction
from models.truncated_series import TruncatedSeries, rf_expand_epsilon
from utils.precision import series_to_mpf, to_mpf

logger = logging.getLogger(__name__)

EPSILON_ORDER = 8
SINGULAR_POWER = 6


def _vanishes(value: Any, tolerance: Optional[Any]) -> bool:
    if isinstance(value, TruncatedSeries):
        return all(_vanishes(c, tolerance) for c in value.coefficients)
    if tolerance is None or isinstance(value, (int, Fraction)):
        return value == 0
    return abs(value) <= tolerance


def check_even_expansion(series: TruncatedSeries, label: str, tolerance: Optional[Any] = None) -> None:
    """Odd coefficients and the eps^2 coefficient must vanish"""
    for power in range(1, series.order + 1):
        if (power % 2 == 1 or power == 2) and not _vanishes(series.coefficient(power), tolerance):
            raise SingularExpansionError(f"{label}: eps^{power} coefficient does not vanish")


def singular_coeff(function: RationalFunction, order: int = EPSILON_ORDER) -> Fraction:
    """[eps^6] of f((1 - eps)/(1 + eps)) for an x -> 1/x invariant f"""
    if order < SINGULAR_POWER:
        raise DomainError(f"expansion order must reach eps^{SINGULAR_POWER}")
    series = rf_expand_epsilon(function, order)
    check_even_expansion(series, repr(function))
    return series.coefficient(SINGULAR_POWER)


class EpsilonFrame:
    """x, (1 - x^j)/eps and the rational prefactors as eps-series at a fixed order"""

    def __init__(self, order: int = EPSILON_ORDER, numeric: bool = False):
        self.order = order
        self.numeric = numeric
        self._cache: Dict[Any, TruncatedSeries] = {}

    def _convert(self, series: TruncatedSeries) -> TruncatedSeries:
        return series_to_mpf(series) if self.numeric else series

    def rational(self, key: Any, function: RationalFunction) -> TruncatedSeries:
        if key not in self._cache:
            self._cache[key] = self._convert(rf_expand_epsilon(function, self.order))
        return self._cache[key]

    def x_power(self, j: int) -> TruncatedSeries:
        return self.rational(("x", j), RationalFunction(Polynomial.monomial(j, 1, "x"), 1, "x"))

    def e(self, j: int) -> TruncatedSeries:
        """(1 - x^j) / eps, equal to 2j at eps = 0"""
        key = ("e", j)
        if key not in self._cache:
            expanded = rf_expand_epsilon(RationalFunction(one_minus_x_power(j), 1, "x"), self.order + 1)
            self._cache[key] = self._convert(expanded.divide_by_variable(1))
        return self._cache[key]


def _base_value(a_value: Any) -> Any:
    return a_value.coefficients[0] if isinstance(a_value, TruncatedSeries) else a_value


def initial_w(d: int, a_base: Any) -> Any:
    """Root w of the eps = 0 quadratic on the branch through w = 0 at a = 0"""
    if a_base == 0:
        return 0
    if a_base == 1:
        return 2 - 2 * d
    rho_limit = Fraction((d - 1) * (d + 5), (d + 1) * (d + 3))
    scaled = to_mpf(a_base) * to_mpf(rho_limit)
    return 6 - sqrt(36 + 32 * scaled / (1 - scaled))


def solve_w(d: int, a_value: Any, frame: EpsilonFrame) -> TruncatedSeries:
    """w(eps) with mu = 1 + eps w, from Newton steps on
    Q(w) = w (e_6 - w x^6) + a rho (e_2 - w x^2)(e_4 - w x^4)
    """
    if d == 1:
        return TruncatedSeries.zero(frame.order, "eps")
    rho = frame.rational(("rho", d), rho_closed(d))
    scaled_rho = rho * a_value
    x2, x4, x6 = frame.x_power(2), frame.x_power(4), frame.x_power(6)
    e2, e4, e6 = frame.e(2), frame.e(4), frame.e(6)

    start = initial_w(d, _base_value(a_value))
    if isinstance(a_value, TruncatedSeries):
        start = TruncatedSeries.constant(start, a_value.order, a_value.variable)
        inner_order = a_value.order
    else:
        inner_order = 0
    w = TruncatedSeries.constant(start, frame.order, "eps")
    for _ in range((frame.order + inner_order + 1).bit_length() + 2):
        residual = w * (e6 - w * x6) + scaled_rho * (e2 - w * x2) * (e4 - w * x4)
        if not frame.numeric and residual.is_zero():
            break
        slope = e6 - 2 * w * x6 - scaled_rho * (x2 * (e4 - w * x4) + x4 * (e2 - w * x2))
        w = w - residual / slope
    return w


def hull_epsilon_series(k: int, d: int, a_value: Any, order: int = EPSILON_ORDER) -> TruncatedSeries:
    """H_k(alpha, d) at x = (1 - eps)/(1 + eps) with a = alpha^2.

    ``a_value`` is an exact rational, an mpmath number, or a delta-series
    a_0 + delta for exact Taylor coefficients in a around a_0.
    """
    if k < 2 or not 1 <= d <= k - 1:
        raise DomainError(f"hull perimeter needs k >= 2 and 1 <= d <= k - 1, got k={k}, d={d}")
    base = _base_value(a_value)
    numeric = not (isinstance(base, (int, Fraction)) and base in (0, 1))
    frame = EpsilonFrame(order, numeric)
    if numeric:
        a_value = series_to_mpf(a_value) if isinstance(a_value, TruncatedSeries) else to_mpf(a_value)
    if d == 1:
        return frame.rational(("G", k), Gk_closed(k))

    n = k - d
    amp = frame.rational("amplitude", amplitude())

    def F(w: TruncatedSeries) -> TruncatedSeries:
        def f(j: int) -> TruncatedSeries:
            return frame.e(j) - w * frame.x_power(j)

        return amp * f(n) * f(n + 6) / (f(n + 2) * f(n + 4))

    return F(solve_w(d, a_value, frame)) - F(solve_w(d - 1, a_value, frame))


def hull_singular_coefficient(k: int, d: int, a_value: Any, order: int = EPSILON_ORDER) -> Any:
    series = hull_epsilon_series(k, d, a_value, order)
    base = _base_value(a_value)
    numeric = not (isinstance(base, (int, Fraction)) and base in (0, 1))
    tolerance = mpf(10) ** (-(mp.dps * 2) // 3) if numeric else None
    check_even_expansion(series, f"H_{k}(d={d})", tolerance)
    return series.coefficient(SINGULAR_POWER)


def two_point_singular_coefficient(k: int) -> Fraction:
    return singular_coeff(Gk_closed(k))

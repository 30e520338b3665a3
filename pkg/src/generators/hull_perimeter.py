"""
Generating functions of slices with a hull-perimeter weight.

H_k(alpha, d) weights each slice of height k by alpha^L(d), where L(d) is the
length of the dividing line at distance d. With a = alpha^2 it is obtained by
iterating the kernel k - d times on a t_d and on a t_{d-1}, or in closed form
through the root mu = lambda x^(d-1) of a quadratic equation.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List

from mpmath import mp, mpf, sqrt

from core.errors import BranchError, ConvergenceError, DomainError
from generators.classical import solve_classical, two_point_series
from generators.closed_form import Gk_closed, ONE_PLUS_X2, TRINOMIAL, X, G_of_x, Rk_closed, g_of_x, one_minus_x_power
from generators.kernel_system import iterate_t, kernel_apply, solve_phi_omega, to_g_series
from models.polynomial import Polynomial
from models.rational_function import RationalFunction
from models.truncated_series import TruncatedSeries, series_compose, series_from_rational, series_revert
from utils.precision import evaluate_mpf, to_mpf

logger = logging.getLogger(__name__)

A_VAR = Polynomial.gen("a")


def _check_range(k: int, d: int) -> None:
    if k < 2 or not 1 <= d <= k - 1:
        raise DomainError(f"hull perimeter needs k >= 2 and 1 <= d <= k - 1, got k={k}, d={d}")


def amplitude() -> RationalFunction:
    """x(1+x+x^2)/(1+x^2)^2"""
    return RationalFunction(X * TRINOMIAL, ONE_PLUS_X2 ** 2, "x")


def rho_closed(d: int) -> RationalFunction:
    """T_d / A = (1-x^(d-1))(1-x^(d+5)) / ((1-x^(d+1))(1-x^(d+3)))"""
    if d < 1:
        raise DomainError(f"rho needs d >= 1, got {d}")
    u = one_minus_x_power
    return RationalFunction(u(d - 1) * u(d + 5), u(d + 1) * u(d + 3), "x")


def F_closed(n: int, mu: Any, x: Any, amplitude_value: Any) -> Any:
    """A (1 - mu x^n)(1 - mu x^(n+6)) / ((1 - mu x^(n+2))(1 - mu x^(n+4)))"""
    return amplitude_value * (1 - mu * x ** n) * (1 - mu * x ** (n + 6)) / (
        (1 - mu * x ** (n + 2)) * (1 - mu * x ** (n + 4))
    )


@dataclass(frozen=True)
class AlphaSeries:
    """g-series whose coefficients are polynomials in a = alpha^2"""

    series: TruncatedSeries
    k: int
    d: int

    @property
    def order(self) -> int:
        return self.series.order

    def count(self, n: int, p: int) -> Any:
        """Number of slices with n faces and dividing line of length 2p"""
        return Polynomial.coerce(self.series.coefficient(n), "a").coefficient(p)

    def perimeter_counts(self, n: int) -> Dict[int, Any]:
        poly = Polynomial.coerce(self.series.coefficient(n), "a")
        return {p: c for p, c in enumerate(poly.coefficients) if c != 0}

    def specialize(self, a_value: Any) -> TruncatedSeries:
        return self.series.map_coefficients(lambda c: Polynomial.coerce(c, "a").evaluate(a_value))

    def invariant_problems(self) -> List[str]:
        problems = []
        for n, c in enumerate(self.series.coefficients):
            for p, value in enumerate(Polynomial.coerce(c, "a").coefficients):
                if not isinstance(value, int) or value < 0:
                    problems.append(f"[g^{n} a^{p}] = {value} is not a non-negative integer")
        if self.specialize(1) != two_point_series(self.k, self.order):
            problems.append("H(alpha = 1) differs from G_k")
        if self.d >= 2 and not self.specialize(0).is_zero():
            problems.append("H(alpha = 0) is not zero")
        return problems


@lru_cache(maxsize=None)
def H_series_iterated(k: int, d: int, order: int) -> AlphaSeries:
    """R_1 [K^(k-d)(a t_d) - K^(k-d)(a t_{d-1})] as a g-series over Q[a]"""
    _check_range(k, d)
    if d == 1:
        base = two_point_series(k, order).map_coefficients(lambda c: Polynomial.coerce(c, "a"))
        return AlphaSeries(base, k, d)

    phi = solve_phi_omega(order).phi
    t_series = iterate_t(d, order)
    upper, lower = A_VAR * t_series[d], A_VAR * t_series[d - 1]
    for _ in range(k - d):
        upper = kernel_apply(phi, upper)
        lower = kernel_apply(phi, lower)
    r1 = solve_classical(1, order).R(1)
    return AlphaSeries(r1 * to_g_series(upper - lower), k, d)


def _x_of_g(order: int) -> TruncatedSeries:
    return series_revert(series_from_rational(g_of_x(), order, "x"), variable="g")


def mu_series(d: int, order: int) -> TruncatedSeries:
    """Analytic root mu(x) over Q[a] of mu = 1 - a rho (1 - mu x^2)(1 - mu x^4)/(1 - mu x^6)"""
    if d == 1:
        return TruncatedSeries.constant(1, order, "x")
    x = TruncatedSeries.variable_series(order, "x")
    scaled_rho = A_VAR * series_from_rational(rho_closed(d), order, "x")
    x2, x4, x6 = x ** 2, x ** 4, x ** 6
    mu = TruncatedSeries.constant(1, order, "x")
    for _ in range(order // 2 + 3):
        updated = 1 - scaled_rho * (1 - mu * x2) * (1 - mu * x4) / (1 - mu * x6)
        if updated == mu:
            return updated
        mu = updated
    raise ConvergenceError(f"mu fixed point did not settle at x-order {order}")


def H_series_closed(k: int, d: int, order: int) -> AlphaSeries:
    """Same series as H_series_iterated, through F_n(mu_d) - F_n(mu_{d-1}) in x"""
    _check_range(k, d)
    if d == 1:
        return H_series_iterated(k, 1, order)
    n = k - d
    x = TruncatedSeries.variable_series(order, "x")
    amp = series_from_rational(amplitude(), order, "x")
    h_x = F_closed(n, mu_series(d, order), x, amp) - F_closed(n, mu_series(d - 1, order), x, amp)
    return AlphaSeries(series_compose(h_x, _x_of_g(order)), k, d)


def generalized_lambda_residual(lam: Any, d: int, n: int, order: int) -> TruncatedSeries:
    """K^n(t_d(lambda)) - t_{d+n}(lambda) as a G-series; zero for small enough lambda"""
    if d < 1 or n < 0:
        raise DomainError(f"need d >= 1 and n >= 0, got d={d}, n={n}")
    x = TruncatedSeries.variable_series(order, "x")
    amp = series_from_rational(amplitude(), order, "x")
    r1 = series_from_rational(Rk_closed(1), order, "x")
    x_of_G = series_revert(series_from_rational(G_of_x(), order, "x"), variable="G")

    def reduced(steps: int) -> TruncatedSeries:
        mu = lam * x ** (d - 1)
        return series_compose(F_closed(steps, mu, x, amp) / r1, x_of_G)

    phi = solve_phi_omega(order).phi
    value = reduced(0)
    for _ in range(n):
        value = kernel_apply(phi, value)
    return value - reduced(n)


@dataclass(frozen=True)
class LambdaSolution:
    alpha: Any
    d: int
    x: Any
    mu: Any
    companion: Any

    @property
    def lam(self) -> Any:
        return self.mu / self.x ** (self.d - 1)

    @property
    def companion_lam(self) -> Any:
        return self.companion / self.x ** (self.d - 1)

    def root_product(self) -> Any:
        """lam * companion_lam * x^(2d+4), equal to 1 by Vieta"""
        return self.lam * self.companion_lam * self.x ** (2 * self.d + 4)


def _mu_roots(a_rho: Any, x: Any):
    quadratic = x ** 6 * (a_rho - 1)
    linear = (1 + x ** 6) - a_rho * (x ** 2 + x ** 4)
    constant = a_rho - 1
    discriminant = linear * linear - 4 * quadratic * constant
    if discriminant < 0:
        raise BranchError(f"complex roots for a*rho = {a_rho}")
    root = sqrt(discriminant)
    return (-linear + root) / (2 * quadratic), (-linear - root) / (2 * quadratic)


def lambda_of(alpha: Any, d: int, x: Any, steps: int = 64) -> LambdaSolution:
    """Track the root through mu = x^(d-1) at alpha = 1 down to ``alpha`` by continuation.

    Only alpha^2 enters the quadratic, so negative alpha follows the path of |alpha|.
    """
    alpha, x = to_mpf(alpha), to_mpf(x)
    if not -1 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [-1, 1], got {alpha}")
    alpha = abs(alpha)
    if not 0 < x < 1:
        raise DomainError(f"x must lie in (0, 1), got {x}")
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if d == 1:
        return LambdaSolution(alpha, d, x, mpf(1), mpf("inf"))

    rho = evaluate_mpf(rho_closed(d), x)
    mu, companion = x ** (d - 1), 1 / x ** (d + 5)
    separation_floor = mpf(10) ** (-mp.dps // 2)
    for step in range(1, steps + 1):
        a_current = (1 + (alpha - 1) * mpf(step) / steps) ** 2
        if a_current * rho == 1:
            raise BranchError("a*rho = 1 degenerates the quadratic")
        first, second = _mu_roots(a_current * rho, x)
        if abs(first - second) < separation_floor:
            raise BranchError(f"branch meets its companion at alpha = {a_current ** 0.5}")
        mu, companion = (first, second) if abs(first - mu) <= abs(second - mu) else (second, first)
    return LambdaSolution(alpha, d, x, mu, companion)


def H_closed(k: int, d: int, alpha: Any, x: Any, steps: int = 64) -> Any:
    """Numerical H_k(alpha, d) at a point 0 < x < 1"""
    _check_range(k, d)
    x = to_mpf(x)
    if d == 1:
        return evaluate_mpf(Gk_closed(k), x)
    amp = evaluate_mpf(amplitude(), x)
    n = k - d
    mu_upper = lambda_of(alpha, d, x, steps).mu
    mu_lower = lambda_of(alpha, d - 1, x, steps).mu
    return F_closed(n, mu_upper, x, amp) - F_closed(n, mu_lower, x, amp)

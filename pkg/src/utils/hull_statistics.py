"""
Hull-perimeter statistics in the local limit of large maps
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List

import numpy as np
from mpmath import exp, mpf, sqrt
from scipy import integrate

from core.errors import DomainError
from models.polynomial import Polynomial
from models.rational_function import RationalFunction
from models.truncated_series import TruncatedSeries
from utils.precision import to_mpf
from utils.singular_expansion import hull_singular_coefficient, two_point_singular_coefficient

logger = logging.getLogger(__name__)

SCALING_FACTOR = Fraction(1, 4)


def _check_infinite_range(d: int) -> None:
    if d < 2:
        raise DomainError(f"statistics at k = infinity need d >= 2, got {d}")


def _check_finite_range(k: int, d: int) -> None:
    if not 2 <= d <= k - 1:
        raise DomainError(f"finite-k statistics need 2 <= d <= k - 1, got k={k}, d={d}")


# k -> infinity

def E_inf_alpha(alpha: Any, d: int) -> Any:
    """E_inf(alpha^L(d)) for 0 <= alpha <= 1"""
    _check_infinite_range(d)
    a = to_mpf(alpha) ** 2
    if not 0 <= a <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")

    def radical(p: int) -> Any:
        return sqrt((p * (9 - a) + 8 * a) / (p * (1 - a) + 8 * a))

    return radical((d + 1) * (d + 3)) - radical(d * (d + 2))


def E_inf_mean(d: int) -> Fraction:
    _check_infinite_range(d)
    return Fraction(3 * (d ** 4 + 6 * d ** 3 + 10 * d ** 2 + 3 * d - 5), 8 * (d + 1) * (d + 2))


@lru_cache(maxsize=None)
def A_coefficient(p: int) -> int:
    """sum_q 2^q C(p-1, q) C(2q+1, q)"""
    if p < 1:
        raise DomainError(f"A(p) needs p >= 1, got {p}")
    return sum(2 ** q * math.comb(p - 1, q) * math.comb(2 * q + 1, q) for q in range(p))


def scaled_A_table(p_max: int) -> np.ndarray:
    """A(p) / 9^p for p = 0..p_max from the three-term recurrence of sqrt((1-z)/(1-9z))

    Entry 0 is unused. The scaling keeps every entry O(p^(-1/2)).
    """
    sigma = np.zeros(max(p_max, 1) + 1)
    sigma[0], sigma[1] = 1.0, 4.0 / 9.0
    for n in range(1, p_max):
        sigma[n + 1] = ((10 * n + 4) * sigma[n] / 9.0 - (n - 1) * sigma[n - 1] / 9.0) / (n + 1)
    table = sigma[: p_max + 1] / 4.0
    table[0] = 0.0
    return table


def p_inf(d: int, p: int) -> Fraction:
    """Exact probability that L(d) = 2p at k = infinity"""
    _check_infinite_range(d)
    if p < 1:
        return Fraction(0)
    r = Fraction((d - 1) * (d + 5), (d + 1) * (d + 3))
    r2 = Fraction((d - 2) * (d + 4), d * (d + 2))
    return 4 * Fraction(3) ** (1 - 2 * p) * (r ** p - r2 ** p) * A_coefficient(p)


@dataclass
class PerimeterDistribution:
    """Probabilities of L(d) = 2p for p = 1..p_max with the missing mass"""

    d: int
    k: Any
    probabilities: Dict[int, Any] = field(default_factory=dict)

    @property
    def tail_mass(self) -> Any:
        return 1 - sum(self.probabilities.values())

    @property
    def tail_bound(self) -> float:
        """Geometric estimate of the mass beyond p_max from the last two terms"""
        if len(self.probabilities) < 2:
            return math.inf
        previous, last = (float(self.probabilities[p]) for p in sorted(self.probabilities)[-2:])
        if previous <= 0 or last >= previous:
            return math.inf
        ratio = last / previous
        return last * ratio / (1 - ratio)

    def rows(self) -> List[tuple]:
        return sorted(self.probabilities.items())


def p_inf_table(d: int, p_max: int) -> PerimeterDistribution:
    """Float probabilities through the scaled recurrence; stable for large p"""
    _check_infinite_range(d)
    r = ((d - 1) * (d + 5)) / ((d + 1) * (d + 3))
    r2 = ((d - 2) * (d + 4)) / (d * (d + 2))
    powers = np.arange(1, p_max + 1)
    # 3^(1-2p) A(p) = 3 (A(p)/9^p)
    values = 4 * 3 * scaled_A_table(p_max)[1:] * (r ** powers - r2 ** powers)
    table = PerimeterDistribution(d=d, k=math.inf)
    table.probabilities = {int(p): float(v) for p, v in zip(powers, values)}
    return table


def perimeter_normalization(d: int, p_max: int) -> float:
    return sum(p_inf_table(d, p_max).probabilities.values())


# Finite k

def E_k_alpha(k: int, d: int, alpha: Any) -> Any:
    """E_k(alpha^L(d)) from the singular amplitudes of H_k and G_k"""
    _check_finite_range(k, d)
    a = to_mpf(alpha) ** 2
    return hull_singular_coefficient(k, d, a) / to_mpf(two_point_singular_coefficient(k))


def E_k_distribution(k: int, d: int, p_max: int) -> PerimeterDistribution:
    """Exact P(L(d) = 2p) for p = 1..p_max at finite k"""
    _check_finite_range(k, d)
    if p_max < 1:
        raise DomainError(f"p_max must be >= 1, got {p_max}")
    delta = TruncatedSeries([0, 1], p_max, "delta")
    amplitude = hull_singular_coefficient(k, d, delta)
    total = two_point_singular_coefficient(k)
    table = PerimeterDistribution(d=d, k=k)
    for p in range(1, p_max + 1):
        table.probabilities[p] = Fraction(amplitude.coefficient(p)) / total
    return table


def E_k_mean_from_expansion(k: int, d: int) -> Fraction:
    """2 d/da of the singular amplitude at a = 1"""
    _check_finite_range(k, d)
    around_one = TruncatedSeries([1, 1], 1, "delta")
    amplitude = hull_singular_coefficient(k, d, around_one)
    return 2 * Fraction(amplitude.coefficient(1)) / two_point_singular_coefficient(k)


def E_k_mean_function(d: int) -> RationalFunction:
    """Closed expression of E_k(L(d)) as a rational function of k"""
    _check_infinite_range(d)
    k = Polynomial.gen("k")
    upper = (d - 1) * (d + 1) * (d + 3) * (d + 5)
    lower = (d - 2) * d * (d + 2) * (d + 4)
    prefactor = RationalFunction(
        k * (k + 1) * (k + 2) * (k + 3),
        2 * (2 * k + 3) * (10 * k ** 6 + 90 * k ** 5 + 283 * k ** 4 + 348 * k ** 3 + 103 * k ** 2 - 42 * k - 36),
        "k",
    )
    first = RationalFunction(
        upper * (k + 2) * ((k + 1) ** 2 * (k + 3) ** 2 * (5 * k ** 2 + 20 * k + 4) - upper * (5 * d * d + 20 * d + 24) - 18),
        (d + 2) * (k + 1) ** 2 * (k + 3) ** 2,
        "k",
    )
    second = RationalFunction(
        lower * (k + 1) * (k ** 2 * (k + 2) ** 2 * (5 * k ** 2 + 10 * k - 11) - lower * (5 * d * d + 10 * d + 9) - 18),
        (d + 1) * k ** 2 * (k + 2) ** 2,
        "k",
    )
    return prefactor * (first - second)


def E_k_mean(k: int, d: int) -> Fraction:
    _check_finite_range(k, d)
    return E_k_mean_function(d).evaluate(Fraction(k))


def E_k_mean_limit(d: int) -> Fraction:
    """k -> infinity limit of E_k(L(d)), read off the leading coefficients"""
    function = E_k_mean_function(d)
    top, bottom = function.numerator, function.denominator
    if top.degree < bottom.degree:
        return Fraction(0)
    if top.degree > bottom.degree:
        raise DomainError("E_k(L(d)) grows with k")
    return Fraction(top.leading) / Fraction(bottom.leading)


# Scaling limits

def mean_profile(u: Any) -> Any:
    """Limit of E_k(L(d)) / d^2 as k, d grow with u = d/k fixed: (3c/2)(1 + u - 3u^6 + u^7)"""
    if not 0 <= u <= 1:
        raise DomainError(f"u must lie in [0, 1], got {u}")
    return 3 * SCALING_FACTOR / 2 * (1 + u - 3 * u ** 6 + u ** 7)


def laplace_limit(tau: Any) -> Any:
    return (1 + float(SCALING_FACTOR) * tau) ** -1.5


def density_limit(length: Any) -> Any:
    """Limiting density of L = perimeter / d^2"""
    c = float(SCALING_FACTOR)
    if length < 0:
        return 0.0
    return 2 / math.sqrt(math.pi) * math.sqrt(length) / c ** 1.5 * math.exp(-length / c)


def laplace_functional(tau: Any, d: int) -> Any:
    """E_inf(exp(-tau L(d) / d^2)) at finite d"""
    return E_inf_alpha(exp(-to_mpf(tau) / mpf(d) ** 2), d)


def density_moments() -> Dict[str, float]:
    """Normalization, mean and Laplace transform at tau = 1 of the limiting density"""
    mass, _ = integrate.quad(density_limit, 0, math.inf)
    mean, _ = integrate.quad(lambda length: length * density_limit(length), 0, math.inf)
    laplace, _ = integrate.quad(lambda length: math.exp(-length) * density_limit(length), 0, math.inf)
    return {"mass": mass, "mean": mean, "laplace_at_1": laplace}


def rescaled_distribution(d: int, p_max: int) -> List[tuple]:
    """(L = 2p / d^2, d^2/2 * P(L(d) = 2p)) for comparison with the limiting density"""
    table = p_inf_table(d, p_max)
    return [(2 * p / d ** 2, d ** 2 / 2 * prob) for p, prob in table.rows()]

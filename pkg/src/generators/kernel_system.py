"""
Rescaled kernel system for the slice generating functions.

In the rescaled variable G = g R_1^2 the functions phi(t, G), omega(t, G) and
h4(G) = phi(0, G) satisfy

    omega = (G/t) [ (t+1)phi / (1 - (t+1)phi) - h4 / (1 - h4) ]
    phi   = G + (G/t) [ t omega / (1 - (t+1)omega)
                        + (phi - h4 + t omega h4) / ((1 - h4)(1 - (t+1)omega)) ]

while the reduced slice functions t_k = T_k / R_1 obey t_k = K(t_{k-1}) with the
kernel K(t) = v / (1 - v), v = (t + 1) phi(t).
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, List, Optional

from core.errors import ConvergenceError, DivisibilityError, DomainError, ValuationError, VariableMismatchError
from generators.classical import solve_classical
from models.polynomial import Polynomial
from models.truncated_series import TruncatedSeries, series_compose, series_revert

logger = logging.getLogger(__name__)

T = Polynomial.gen("t")
T_PLUS_ONE = Polynomial([1, 1], "t")


def _as_t_polynomial(value: Any) -> Polynomial:
    return Polynomial.coerce(value, "t")


@dataclass(frozen=True)
class BivariateSeries:
    """A G-series whose coefficients are polynomials in t"""

    series: TruncatedSeries
    order_t: int

    @property
    def order_g(self) -> int:
        return self.series.order

    def coefficient(self, n: int, j: int) -> Any:
        return _as_t_polynomial(self.series.coefficient(n)).coefficient(j)

    def t_coefficient(self, j: int) -> TruncatedSeries:
        """[t^j] as a G-series"""
        return self._t_slices[j] if j < len(self._t_slices) else TruncatedSeries.zero(self.order_g, "G")

    @cached_property
    def _t_slices(self) -> List[TruncatedSeries]:
        return [
            self.series.map_coefficients(lambda c, j=j: _as_t_polynomial(c).coefficient(j))
            for j in range(self.order_t + 1)
        ]

    def at_t_zero(self) -> TruncatedSeries:
        return self.t_coefficient(0)

    def max_t_degree(self, n: int) -> int:
        return _as_t_polynomial(self.series.coefficient(n)).degree


@dataclass(frozen=True)
class PhiOmegaSolution:
    phi: BivariateSeries
    omega: BivariateSeries
    h4: TruncatedSeries
    sweeps: int


def _trim(series: TruncatedSeries, order_t: int) -> TruncatedSeries:
    return series.map_coefficients(lambda c: _as_t_polynomial(c).truncate(order_t))


def _divide_by_t(series: TruncatedSeries, label: str) -> TruncatedSeries:
    def divide(c: Any) -> Polynomial:
        poly = _as_t_polynomial(c)
        if poly.coefficient(0) != 0:
            raise DivisibilityError(f"{label} bracket has a non-zero t^0 part")
        return poly.divide_by_variable(1)

    return series.map_coefficients(divide)


def _times_g(series: TruncatedSeries) -> TruncatedSeries:
    return series.shift(1).truncate(series.order)


def _geometric(series: TruncatedSeries) -> TruncatedSeries:
    """X / (1 - X)"""
    return series / (1 - series)


def _omega_rhs(phi: TruncatedSeries) -> TruncatedSeries:
    h4 = phi.map_coefficients(lambda c: _as_t_polynomial(c).coefficient(0))
    bracket = _geometric(T_PLUS_ONE * phi) - _geometric(h4)
    return _times_g(_divide_by_t(bracket, "omega"))


def _phi_rhs(phi: TruncatedSeries, omega: TruncatedSeries) -> TruncatedSeries:
    h4 = phi.map_coefficients(lambda c: _as_t_polynomial(c).coefficient(0))
    damping = 1 - T_PLUS_ONE * omega
    bracket = (T * omega) / damping + (phi - h4 + T * omega * h4) / ((1 - h4) * damping)
    return TruncatedSeries.variable_series(phi.order, "G") + _times_g(_divide_by_t(bracket, "phi"))


@lru_cache(maxsize=None)
def solve_phi_omega(order_g: int, order_t: Optional[int] = None) -> PhiOmegaSolution:
    """Alternate the omega and phi updates from phi = G, omega = 0 until a sweep is a no-op.

    [G^n]phi and [G^n]omega have t-degree at most n - 1, so a working t budget
    of max(order_t, order_g) makes the truncation invisible.
    """
    if order_g < 1:
        raise DomainError(f"order_g must be >= 1, got {order_g}")
    order_t = order_g if order_t is None else order_t
    working_t = max(order_t, order_g)

    phi = TruncatedSeries.variable_series(order_g, "G").map_coefficients(_as_t_polynomial)
    omega = TruncatedSeries.zero(order_g, "G").map_coefficients(_as_t_polynomial)
    budget = 2 * (order_g + 1) + 2
    for sweep in range(1, budget + 1):
        omega_next = _trim(_omega_rhs(phi), working_t)
        phi_next = _trim(_phi_rhs(phi, omega_next), working_t)
        if phi_next == phi and omega_next == omega:
            break
        phi, omega = phi_next, omega_next
    else:
        raise ConvergenceError(f"kernel system did not settle within {budget} sweeps")
    logger.debug(f"kernel system settled after {sweep} sweeps at G-order {order_g}")

    phi_series = BivariateSeries(_trim(phi, order_t), order_t)
    return PhiOmegaSolution(
        phi=phi_series,
        omega=BivariateSeries(_trim(omega, order_t), order_t),
        h4=BivariateSeries(phi, working_t).at_t_zero(),
        sweeps=sweep,
    )


def system_residuals(solution: PhiOmegaSolution) -> Dict[str, TruncatedSeries]:
    """Both equations evaluated on the solution; every entry should be zero"""
    phi, omega = solution.phi.series, solution.omega.series
    order_t = solution.phi.order_t
    return {
        "omega": omega - _trim(_omega_rhs(phi), order_t),
        "phi": phi - _trim(_phi_rhs(phi, omega), order_t),
    }


def kernel_apply(phi: BivariateSeries, t_in: TruncatedSeries) -> TruncatedSeries:
    """K(t_in) = v / (1 - v), v = (t_in + 1) phi(t_in), for t_in without constant term.

    ``t_in`` may carry any coefficient ring (Fractions, Polynomials in a, ...).
    """
    if t_in.variable != "G":
        raise VariableMismatchError(f"kernel argument must be a G-series, got one in {t_in.variable}")
    if t_in.coefficients[0] != 0:
        raise ValuationError("kernel argument must have zero constant term")
    value: Any = 0
    for j in range(phi.order_t, -1, -1):
        value = value * t_in + phi.t_coefficient(j)
    if not isinstance(value, TruncatedSeries):
        value = TruncatedSeries.constant(value, t_in.order, t_in.variable)
    v = (t_in + 1) * value
    return v / (1 - v)


def kernel_bivariate(solution: PhiOmegaSolution) -> BivariateSeries:
    """K(t) = (t+1)phi / (1 - (t+1)phi) as a bivariate series"""
    return BivariateSeries(_trim(_geometric(T_PLUS_ONE * solution.phi.series), solution.phi.order_t), solution.phi.order_t)


def iterate_t(kmax: int, order: int) -> Dict[int, TruncatedSeries]:
    """t_1 = 0, t_k = K(t_{k-1}) as G-series"""
    if kmax < 1:
        raise DomainError(f"kmax must be >= 1, got {kmax}")
    phi = solve_phi_omega(order).phi
    t_series = {1: TruncatedSeries.zero(order, "G")}
    for k in range(2, kmax + 1):
        t_series[k] = kernel_apply(phi, t_series[k - 1])
    return t_series


@lru_cache(maxsize=None)
def rescaling_series(order: int) -> TruncatedSeries:
    """G(g) = g R_1(g)^2"""
    r1 = solve_classical(1, order).R(1)
    return (r1 * r1).shift(1).truncate(order)


@lru_cache(maxsize=None)
def inverse_rescaling_series(order: int) -> TruncatedSeries:
    """g(G), the compositional inverse of G(g)"""
    return series_revert(rescaling_series(order), variable="G")


def to_g_series(series_in_g_rescaled: TruncatedSeries) -> TruncatedSeries:
    return series_compose(series_in_g_rescaled, rescaling_series(series_in_g_rescaled.order))


def to_rescaled(series_in_g: TruncatedSeries) -> TruncatedSeries:
    return series_compose(series_in_g, inverse_rescaling_series(series_in_g.order))


def slice_series_via_kernel(kmax: int, order: int) -> Dict[int, TruncatedSeries]:
    """R_k(g) = R_1 (t_k(G(g)) + 1)"""
    r1 = solve_classical(1, order).R(1)
    return {k: r1 * (to_g_series(t_k) + 1) for k, t_k in iterate_t(kmax, order).items()}


@dataclass(frozen=True)
class KernelSeries:
    """K(T) = sum_p K_p(g) T^p in the unrescaled variables"""

    coefficients: List[TruncatedSeries]
    provenance: str = "unrescaled"

    def negative_entries(self) -> List[tuple]:
        return [
            (p, n) for p, series in enumerate(self.coefficients) for n, c in enumerate(series.coefficients) if c < 0
        ]


def kernel_coefficients(order: int, p_max: int) -> KernelSeries:
    """K_p(g) = R_1^(1-p) [t^p]K(t, G(g))"""
    if p_max < 0:
        raise DomainError(f"p_max must be >= 0, got {p_max}")
    kernel = kernel_bivariate(solve_phi_omega(order))
    r1 = solve_classical(1, order).R(1)
    return KernelSeries([r1 ** (1 - p) * to_g_series(kernel.t_coefficient(p)) for p in range(p_max + 1)])


def face_degree_series(order: int, i: int) -> TruncatedSeries:
    """f_{2i}(g) = R_1^(-i) [t^(i-2)]omega(t, G(g)) for i >= 2"""
    if i < 2:
        raise DomainError(f"face degree index must be >= 2, got {i}")
    omega = solve_phi_omega(order).omega
    r1 = solve_classical(1, order).R(1)
    return r1 ** (-i) * to_g_series(omega.t_coefficient(i - 2))

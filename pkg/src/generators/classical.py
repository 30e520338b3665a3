"""
Slice generating functions from the three-term relation

    R_k = 1 + g R_k (R_{k+1} + R_{k-1}),   R_0 = 0,

solved order by order in g as a coupled fixed point over k.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List

from core.errors import ConvergenceError, DomainError, EngineError
from models.truncated_series import TruncatedSeries, series_sqrt

logger = logging.getLogger(__name__)

SWEEP_SCHEDULES = ("jacobi", "ascending", "descending")


@dataclass(frozen=True)
class SliceSeriesTable:
    """R_1..R_kmax truncated at g^order, plus the k -> infinity limit"""

    order: int
    entries: Dict[int, TruncatedSeries]
    r_infinity: TruncatedSeries

    @property
    def kmax(self) -> int:
        return max(self.entries)

    def R(self, k: int) -> TruncatedSeries:
        if k == 0:
            return TruncatedSeries.zero(self.order)
        if k in self.entries:
            return self.entries[k]
        raise DomainError(f"R_{k} is outside the solved range 0..{self.kmax}")

    def two_point(self, k: int) -> TruncatedSeries:
        """G_k = R_k - R_{k-1} - [k == 1]"""
        if k < 1:
            raise DomainError(f"two-point function needs k >= 1, got {k}")
        series = self.R(k) - self.R(k - 1)
        return series - 1 if k == 1 else series

    def check_invariants(self) -> List[str]:
        """Constant term 1, non-negative integer coefficients, R_k <= R_{k+1} coefficientwise"""
        problems = []
        for k, series in sorted(self.entries.items()):
            if series.coefficients[0] != 1:
                problems.append(f"R_{k} has constant term {series.coefficients[0]}")
            if any(not isinstance(c, int) or c < 0 for c in series.coefficients):
                problems.append(f"R_{k} has a coefficient that is not a non-negative integer")
            if k + 1 in self.entries:
                later = self.entries[k + 1].coefficients
                if any(a > b for a, b in zip(series.coefficients, later)):
                    problems.append(f"R_{k} exceeds R_{k + 1} somewhere")
        for k, series in self.entries.items():
            if k > self.order and series != self.r_infinity:
                problems.append(f"R_{k} differs from R_infinity below g^{self.order + 1}")
        return problems


@lru_cache(maxsize=None)
def r_infinity_series(order: int) -> TruncatedSeries:
    """R_inf = 1 + 2 g R_inf^2, cross-checked against (1 - sqrt(1 - 8g)) / (4g)"""
    one = TruncatedSeries.constant(1, order)
    g = TruncatedSeries.variable_series(order)
    fixed = one
    for _ in range(order + 2):
        updated = one + 2 * g * fixed * fixed
        if updated == fixed:
            break
        fixed = updated
    else:
        raise ConvergenceError(f"R_infinity did not settle at order {order}")

    root = series_sqrt(TruncatedSeries([1, -8], order + 1))
    closed = (1 - root).divide_by_variable(1) * Fraction(1, 4)
    if closed != fixed:
        raise EngineError("fixed-point and closed-form R_infinity disagree")
    return fixed


@lru_cache(maxsize=None)
def solve_classical(kmax: int, order: int, sweep: str = "jacobi") -> SliceSeriesTable:
    """Solve for R_1..R_kmax modulo g^(order+1).

    The chain is closed at K = kmax + order + 2 with R_k = R_inf for k > K;
    R_k and R_inf agree below g^k so the closure never reaches the kept orders.
    """
    if kmax < 1:
        raise DomainError(f"kmax must be >= 1, got {kmax}")
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    if sweep not in SWEEP_SCHEDULES:
        raise DomainError(f"unknown sweep schedule {sweep!r}")

    r_inf = r_infinity_series(order)
    top = kmax + order + 2
    one = TruncatedSeries.constant(1, order)
    g = TruncatedSeries.variable_series(order)
    zero = TruncatedSeries.zero(order)

    def neighbour(table: Dict[int, TruncatedSeries], k: int) -> TruncatedSeries:
        if k == 0:
            return zero
        if k > top:
            return r_inf
        return table[k]

    def relax(table: Dict[int, TruncatedSeries], k: int) -> TruncatedSeries:
        return one + g * table[k] * (neighbour(table, k + 1) + neighbour(table, k - 1))

    current = {k: one for k in range(1, top + 1)}
    for sweep_index in range(order + 2):
        if sweep == "jacobi":
            updated = {k: relax(current, k) for k in current}
        else:
            updated = dict(current)
            ks = range(1, top + 1) if sweep == "ascending" else range(top, 0, -1)
            for k in ks:
                updated[k] = relax(updated, k)
        if all(updated[k] == current[k] for k in current):
            logger.debug(f"classical system settled after {sweep_index + 1} sweeps ({sweep}, order {order})")
            break
        current = updated
    else:
        raise ConvergenceError(f"slice relation did not settle within {order + 1} sweeps")

    return SliceSeriesTable(order=order, entries={k: current[k] for k in range(1, kmax + 1)}, r_infinity=r_inf)


def two_point_series(k: int, order: int) -> TruncatedSeries:
    """Generating function of pointed rooted maps with the root edge at distance k"""
    if k < 1:
        raise DomainError(f"two-point function needs k >= 1, got {k}")
    return solve_classical(k, order).two_point(k)

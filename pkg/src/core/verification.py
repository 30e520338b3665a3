"""
Verification suites and the ledger that records their outcome
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Union

import numpy as np

from core.errors import EngineError

logger = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
EXACT = "exact"


@dataclass
class CheckRecord:
    name: str
    category: str
    status: str
    detail: str = ""
    max_abs_error: Union[str, float] = EXACT


@dataclass
class VerificationLedger:
    """Ordered, uniquely named check records"""

    checks: List[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        if any(existing.name == record.name for existing in self.checks):
            raise EngineError(f"duplicate check name {record.name!r}")
        self.checks.append(record)
        log = logger.info if record.status != FAIL else logger.error
        log(f"[{record.status}] {record.name}: {record.detail}")

    def extend(self, records: Iterable[CheckRecord]) -> None:
        for record in records:
            self.add(record)

    @property
    def failures(self) -> List[CheckRecord]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "counts": {status: sum(c.status == status for c in self.checks) for status in (PASS, FAIL, SKIPPED)},
            "checks": [asdict(c) for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def exact(name: str, category: str, ok: bool, detail: str = "") -> CheckRecord:
    return CheckRecord(name, category, PASS if ok else FAIL, detail, EXACT)


def numeric(name: str, category: str, error: float, tolerance: float, detail: str = "") -> CheckRecord:
    error = float(error)
    status = PASS if error <= tolerance else FAIL
    return CheckRecord(name, category, status, f"{detail} (tolerance {tolerance:g})".strip(), error)


def guarded(name: str, category: str, check: Callable[[], CheckRecord]) -> CheckRecord:
    """Run a check, turning engine errors into failures"""
    try:
        return check()
    except (EngineError, ArithmeticError, ValueError) as e:
        return CheckRecord(name, category, FAIL, f"{type(e).__name__}: {e}")


# Suites

def series_suite(orders: int, seed: int = 0) -> List[CheckRecord]:
    from generators.closed_form import g_of_x
    from generators.kernel_system import solve_phi_omega
    from models.truncated_series import (
        TruncatedSeries,
        rf_expand_epsilon,
        series_compose,
        series_div,
        series_from_rational,
        series_mul,
        series_revert,
        series_sqrt,
    )

    category = "series"
    records = []
    order = 8

    def sqrt_check() -> CheckRecord:
        root = series_sqrt(TruncatedSeries([1, -8], 3))
        return exact("sqrt(1 - 8g)", category, root == TruncatedSeries([1, -4, -8, -32], 3), repr(root))

    def revert_check() -> CheckRecord:
        g_series = series_from_rational(g_of_x(), order, "x")
        x_series = series_revert(g_series, variable="g")
        return exact("reversion round trip", category, series_compose(g_series, x_series) == TruncatedSeries.variable_series(order), repr(x_series))

    def h4_check() -> CheckRecord:
        h4 = solve_phi_omega(10).h4
        expected = TruncatedSeries([0, 1, 0, 1, 3, 9, 31, 114, 435, 1713, 6924], 10, "G")
        return exact("h4 expansion", category, h4 == expected, repr(h4))

    def critical_check() -> CheckRecord:
        series = rf_expand_epsilon(g_of_x(), 6)
        expected = TruncatedSeries([Fraction(1, 8), 0, 0, 0, Fraction(-1, 8)], 6, "eps")
        return exact("g at (1-eps)/(1+eps)", category, series == expected, repr(series))

    rng = np.random.default_rng(seed)

    def random_series(head: Optional[int] = None, linear: Optional[int] = None) -> TruncatedSeries:
        coefficients = [int(c) for c in rng.integers(-3, 4, order + 1)]
        if head is not None:
            coefficients[0] = head
        if linear is not None:
            coefficients[1] = linear
        return TruncatedSeries(coefficients, order)

    def ring_check() -> CheckRecord:
        a, b, c = random_series(), random_series(), random_series()
        ok = (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
        return exact("ring axioms on random series", category, ok, f"seed {seed}")

    def division_check() -> CheckRecord:
        a, b = random_series(), random_series(head=1)
        return exact("division undoes multiplication", category, series_div(series_mul(a, b), b) == a, f"seed {seed}")

    def random_sqrt_check() -> CheckRecord:
        s = random_series(head=1)
        return exact("square root squares back", category, series_sqrt(s) ** 2 == s, f"seed {seed}")

    def random_revert_check() -> CheckRecord:
        a = random_series(head=0, linear=1)
        identity = TruncatedSeries.variable_series(order)
        return exact("random reversion round trip", category, series_compose(a, series_revert(a)) == identity, f"seed {seed}")

    for name, check in (
        ("sqrt(1 - 8g)", sqrt_check),
        ("reversion round trip", revert_check),
        ("h4 expansion", h4_check),
        ("g at (1-eps)/(1+eps)", critical_check),
        ("ring axioms on random series", ring_check),
        ("division undoes multiplication", division_check),
        ("square root squares back", random_sqrt_check),
        ("random reversion round trip", random_revert_check),
    ):
        records.append(guarded(name, category, check))
    return records


def classical_suite(orders: int, seed: int = 0) -> List[CheckRecord]:
    from generators.classical import SWEEP_SCHEDULES, solve_classical
    from models.truncated_series import TruncatedSeries

    category = "classical"
    order = max(4, 2 * orders)
    records = []
    table = solve_classical(8, order)
    problems = table.check_invariants()
    records.append(exact("classical invariants", category, not problems, "; ".join(problems) or "R_k increasing in k"))
    expected = TruncatedSeries([1, 1, 3, 12, 56], 4)
    records.append(exact("R_1 leading counts", category, table.R(1).truncate(4) == expected, repr(table.R(1).truncate(4))))
    for sweep in SWEEP_SCHEDULES[1:]:
        other = solve_classical(8, order, sweep)
        same = all(other.R(k) == table.R(k) for k in range(1, 9))
        records.append(exact(f"sweep {sweep} agrees with jacobi", category, same))
    return records


def kernel_suite(orders: int, seed: int = 0) -> List[CheckRecord]:
    from generators.classical import solve_classical
    from generators.kernel_system import kernel_coefficients, slice_series_via_kernel, solve_phi_omega, system_residuals

    category = "kernel"
    order = max(6, 2 * orders)
    records = []
    residuals = system_residuals(solve_phi_omega(order))
    records.append(exact("phi/omega residuals", category, all(r.is_zero() for r in residuals.values())))
    via_kernel = slice_series_via_kernel(8, order)
    table = solve_classical(8, order)
    for k, series in via_kernel.items():
        records.append(exact(f"R_{k} kernel route", category, series == table.R(k)))
    negative = kernel_coefficients(order, 4).negative_entries()
    records.append(exact("kernel coefficients non-negative", category, not negative, str(negative[:3])))
    return records


def closed_form_suite(orders: int, seed: int = 0) -> List[CheckRecord]:
    from generators.classical import solve_classical
    from generators.closed_form import (
        Gk_closed,
        Gk_product,
        Rk_closed,
        Tk_closed,
        Wk_closed,
        alpha_fixed_point,
        beta_fixed_point,
        check_special_line,
        factorized_recursion,
        g_of_x,
        homographic_map,
        Yk_closed,
    )
    from models.rational_function import RationalFunction
    from models.truncated_series import series_compose, series_from_rational, series_revert

    category = "closed-form"
    order = max(8, 2 * orders)
    records = []
    x_of_g = series_revert(series_from_rational(g_of_x(), order, "x"), variable="g")
    table = solve_classical(10, order)
    for k in range(1, 11):
        expanded = series_compose(series_from_rational(Rk_closed(k), order, "x"), x_of_g)
        records.append(exact(f"R_{k} closed form", category, expanded == table.R(k)))
        records.append(exact(f"G_{k} product form", category, Gk_product(k) == Gk_closed(k)))
        records.append(exact(f"T_{k} closed form", category, Tk_closed(k) == Rk_closed(k) - Rk_closed(1)))
    mapping = homographic_map()
    for k in range(2, 11):
        records.append(exact(f"Y_{k} homographic step", category, mapping.apply(Yk_closed(k - 1)) == Yk_closed(k)))
        records.append(exact(f"Y_{k} factorized recursion", category, factorized_recursion(k)[1].is_zero()))
        ratio = Wk_closed(k) / Wk_closed(k - 1)
        records.append(exact(f"W_{k} geometric", category, ratio == RationalFunction.gen("x")))
    relations = mapping.fixed_point_relations(alpha_fixed_point(), beta_fixed_point())
    records.append(exact("homographic fixed points", category, all(relations.values()), str(relations)))
    report = check_special_line()
    records.append(exact("special line identities", category, report.holds, ", ".join(report.failing())))
    return records


def hull_suite(orders: int, seed: int = 0) -> List[CheckRecord]:
    from generators.classical import two_point_series
    from generators.hull_perimeter import H_series_closed, H_series_iterated

    category = "hull"
    order = max(6, min(8, 2 * orders))
    records = []
    for k, d in ((3, 2), (4, 2), (4, 3), (5, 3)):
        iterated = H_series_iterated(k, d, order)
        closed = H_series_closed(k, d, order)
        records.append(exact(f"H_{k}(d={d}) routes agree", category, iterated.series == closed.series))
        problems = iterated.invariant_problems()
        records.append(exact(f"H_{k}(d={d}) invariants", category, not problems, "; ".join(problems)))
        records.append(exact(f"H_{k}(d={d}) at alpha=1", category, iterated.specialize(1) == two_point_series(k, order)))
    return records


def statistics_suite(orders: int, seed: int = 0) -> List[CheckRecord]:
    from utils.hull_statistics import (
        E_inf_mean,
        E_k_mean,
        E_k_mean_from_expansion,
        E_k_mean_limit,
        density_moments,
        laplace_functional,
        laplace_limit,
        mean_profile,
        p_inf,
        perimeter_normalization,
    )

    category = "statistics"
    records = [
        exact("p_inf(2, 1) = 28/45", category, p_inf(2, 1) == Fraction(28, 45), str(p_inf(2, 1))),
        exact("E_inf mean at d=2", category, E_inf_mean(2) == Fraction(105, 32), str(E_inf_mean(2))),
        exact("E_k mean limit at d=2", category, E_k_mean_limit(2) == Fraction(105, 32), str(E_k_mean_limit(2))),
    ]
    for k in (3, 4, 5):
        records.append(
            guarded(
                f"E_{k} mean at d=2 from expansion",
                category,
                lambda k=k: exact(f"E_{k} mean at d=2 from expansion", category, E_k_mean_from_expansion(k, 2) == E_k_mean(k, 2)),
            )
        )
    for d in (2, 5, 10, 20):
        error = abs(perimeter_normalization(d, 4000) - 1)
        records.append(numeric(f"normalization at d={d}", category, error, 1e-9))
    profile_error = abs(float(E_k_mean(2000, 1000)) / 1e6 / float(mean_profile(0.5)) - 1)
    records.append(numeric("mean profile at u=1/2", category, profile_error, 1e-2))
    for tau in (0.5, 1.0, 2.0):
        error = abs(float(laplace_functional(tau, 200)) - laplace_limit(tau))
        records.append(numeric(f"Laplace functional tau={tau}", category, error, 2e-2))
    moments = density_moments()
    records.append(numeric("density mass", category, abs(moments["mass"] - 1), 1e-9))
    records.append(numeric("density mean", category, abs(moments["mean"] - 0.375), 1e-9))
    return records


def oracle_suite(orders: int, seed: int = 0) -> List[CheckRecord]:
    from generators.classical import two_point_series
    from generators.hull_perimeter import H_series_iterated
    from generators.map_enumerator import enumerate_maps
    from utils.map_oracle import count_hull, count_two_point, cut_slice, dividing_line, labeling_problems, line_problems, oriented_distances, two_point_objects, verify_recursion_split

    category = "oracle"
    max_faces = min(orders, 4)
    records = []
    expected_rooted = {1: 1, 2: 3, 3: 12, 4: 56}
    for num_faces in range(1, max_faces + 1):
        count = len(enumerate_maps(num_faces))
        records.append(exact(f"rooted maps F={num_faces}", category, count == expected_rooted[num_faces], str(count)))
        for k in range(1, 7):
            brute = count_two_point(num_faces, k)
            series = two_point_series(k, num_faces).coefficient(num_faces)
            records.append(exact(f"two-point F={num_faces} k={k}", category, brute == series, f"{brute} vs {series}"))
        hull = count_hull(num_faces, 3, 2)
        alpha_series = H_series_iterated(3, 2, num_faces)
        records.append(
            exact(f"hull F={num_faces} k=3 d=2", category, hull == alpha_series.perimeter_counts(num_faces), str(hull))
        )
        problems: List[str] = []
        for cmap in enumerate_maps(num_faces):
            for origin in range(cmap.num_vertices):
                problems += labeling_problems(cmap, oriented_distances(cmap, origin))
            for k in range(1, num_faces + 3):
                for _, labeling in two_point_objects(cmap, k):
                    structure = cut_slice(cmap, labeling)
                    problems += structure.problems()
                    if structure.reglue().canonical_code() != cmap.canonical_code():
                        problems.append("regluing changed the map")
                    for d in range(2, k):
                        problems += line_problems(structure, dividing_line(structure, d))
        records.append(exact(f"map, slice and line properties F={num_faces}", category, not problems, "; ".join(problems[:3])))
    split = verify_recursion_split(max_faces)
    records.append(exact("slice recursion split", category, split.holds, f"{len(split.rows)} (F, k) rows, {len(split.pairs)} sub-slice pairs"))
    return records


SUITES: Dict[str, Callable[[int, int], List[CheckRecord]]] = {
    "series": series_suite,
    "classical": classical_suite,
    "kernel": kernel_suite,
    "closed-form": closed_form_suite,
    "hull": hull_suite,
    "statistics": statistics_suite,
    "oracle": oracle_suite,
}


def run_suites(names: Iterable[str], orders: int = 3, seed: int = 0) -> VerificationLedger:
    ledger = VerificationLedger()
    for name in dict.fromkeys(names):
        if name not in SUITES:
            ledger.add(CheckRecord(f"suite {name}", name, SKIPPED, "unknown suite"))
            continue
        logger.info(f"Running {name} suite")
        try:
            ledger.extend(SUITES[name](orders, seed))
        except (EngineError, ArithmeticError, ValueError) as e:
            ledger.add(CheckRecord(f"suite {name}", name, FAIL, f"{type(e).__name__}: {e}"))
    return ledger

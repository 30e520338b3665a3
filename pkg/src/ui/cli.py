"""
Command-line front end: coefficient tables, perimeter statistics and verification
"""

import argparse
import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from core.app_config import AppConfig
from core.errors import EngineError
from utils.precision import working_precision

logger = logging.getLogger(__name__)

SERIES_KINDS = ("R", "G", "T", "h4", "kernel")


def format_number(value: Any, digits: int = 12) -> str:
    """Exact integers and rationals verbatim, everything else in scientific notation with ``digits`` significant digits"""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, str):
        return value
    number = float(value)
    if math.isinf(number):
        return "inf"
    return f"{number:.{digits - 1}e}"


@dataclass
class Table:
    columns: List[str]
    rows: List[Sequence[Any]] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    def to_csv(self, digits: int) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_number(v, digits) for v in row])
        return buffer.getvalue()

    def to_json(self, digits: int) -> str:
        payload = {key: _json_value(v, digits) for key, v in self.meta.items()}
        payload["columns"] = self.columns
        payload["rows"] = [[_json_value(v, digits) for v in row] for row in self.rows]
        return json.dumps(payload, indent=2) + "\n"


def _json_value(value: Any, digits: int) -> Any:
    if isinstance(value, (list, tuple)):
        return [_json_value(v, digits) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return format_number(value, digits)


# Commands

def cmd_two_point(args: argparse.Namespace, config: AppConfig) -> Table:
    from generators.classical import two_point_series

    series = two_point_series(args.k, args.order)
    coefficients = [series.coefficient(n) for n in range(args.order + 1)]
    return Table(["n", "coefficient"], [(n, c) for n, c in enumerate(coefficients)], {"k": args.k, "coefficients": coefficients})


def cmd_series(args: argparse.Namespace, config: AppConfig) -> Table:
    from generators.classical import solve_classical
    from generators.kernel_system import kernel_coefficients, solve_phi_omega

    if args.kind == "h4":
        h4 = solve_phi_omega(max(args.order, 1)).h4
        return Table(["n", "coefficient"], [(n, h4.coefficient(n)) for n in range(args.order + 1)], {"kind": "h4"})
    if args.kind == "kernel":
        kernel = kernel_coefficients(max(args.order, 1), args.kmax)
        rows = [(p, n, series.coefficient(n)) for p, series in enumerate(kernel.coefficients) for n in range(args.order + 1)]
        return Table(["p", "n", "coefficient"], rows, {"kind": "kernel"})
    table = solve_classical(args.kmax, args.order, args.sweep)
    rows = []
    for k in range(1, args.kmax + 1):
        if args.kind == "R":
            series = table.R(k)
        elif args.kind == "G":
            series = table.two_point(k)
        else:
            series = table.R(k) - table.R(1)
        rows += [(k, n, series.coefficient(n)) for n in range(args.order + 1)]
    return Table(["k", "n", "coefficient"], rows, {"kind": args.kind})


def cmd_hull_dist(args: argparse.Namespace, config: AppConfig) -> Table:
    from utils.hull_statistics import E_k_distribution, density_limit, p_inf_table

    if args.k is None:
        distribution = p_inf_table(args.d, args.pmax)
    else:
        distribution = E_k_distribution(args.k, args.d, args.pmax)
    meta = {
        "d": args.d,
        "k": "inf" if args.k is None else args.k,
        "tail_mass": distribution.tail_mass,
        "tail_bound": distribution.tail_bound,
    }
    if not args.rescaled:
        return Table(["p", "probability"], distribution.rows(), meta)
    rows = []
    for p, probability in distribution.rows():
        length = 2 * p / args.d ** 2
        rows.append((p, probability, length, args.d ** 2 / 2 * float(probability), density_limit(length)))
    return Table(["p", "probability", "L", "scaled_probability", "limit_density"], rows, meta)


def cmd_hull_mean(args: argparse.Namespace, config: AppConfig) -> Table:
    from utils.hull_statistics import E_inf_mean, E_k_mean

    rows = []
    for d in args.d:
        if args.k:
            for k in args.k:
                rows.append((d, k, E_k_mean(k, d)))
        else:
            rows.append((d, "inf", E_inf_mean(d)))
    return Table(["d", "k", "mean"], rows)


def cmd_scaling(args: argparse.Namespace, config: AppConfig) -> Table:
    from utils.hull_statistics import laplace_functional, laplace_limit, mean_profile

    if args.u:
        return Table(["u", "mean_profile"], [(u, mean_profile(u)) for u in args.u])
    rows = []
    for tau in args.tau:
        value = laplace_functional(tau, args.d)
        limit = laplace_limit(tau)
        rows.append((tau, value, limit, abs(float(value) - limit)))
    return Table(["tau", "laplace", "limit", "error"], rows, {"d": args.d})


def cmd_enumerate(args: argparse.Namespace, config: AppConfig) -> Table:
    from generators.map_enumerator import enumerate_maps, enumerate_with_report
    from utils.map_oracle import count_hull, count_two_point

    show_progress = args.progress or config.get("oracle.show_progress", False)
    if args.dump:
        maps = enumerate_maps(args.faces, show_progress)
        return Table(["record"], [(cmap.dump_record(),) for cmap in maps], {"faces": args.faces})
    if args.k is not None and args.d is not None:
        counts = count_hull(args.faces, args.k, args.d)
        return Table(["p", "count"], sorted(counts.items()), {"faces": args.faces, "k": args.k, "d": args.d})
    if args.k is not None:
        return Table(["faces", "k", "count"], [(args.faces, args.k, count_two_point(args.faces, args.k))])
    report = enumerate_with_report(args.faces, show_progress)
    return Table(
        ["faces", "gluings", "planar_gluings", "rooted_maps"],
        [(args.faces, report.candidates, report.planar_gluings, report.rooted_classes)],
    )


def cmd_verify(args: argparse.Namespace, config: AppConfig) -> int:
    from core.verification import run_suites

    suites = args.suite or config.get("verify.suites")
    orders = args.orders if args.orders is not None else config.get("verify.orders", 3)
    ledger = run_suites(suites, orders, args.seed)
    payload = ledger.to_dict()
    payload["suites"] = list(suites)
    payload["orders"] = orders
    payload["seed"] = args.seed
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return ledger.exit_code


COMMANDS = {
    "two-point": cmd_two_point,
    "series": cmd_series,
    "hull-dist": cmd_hull_dist,
    "hull-mean": cmd_hull_mean,
    "scaling": cmd_scaling,
    "enumerate": cmd_enumerate,
}


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None, help="output format")
    common.add_argument("--precision", type=_positive, default=None, help="mpmath decimal digits")
    common.add_argument("--out", type=Path, default=None, help="write to a file instead of stdout")
    common.add_argument("--config", type=Path, default=None, help="JSON configuration file")

    parser = argparse.ArgumentParser(prog="eulerian-slices", description="Exact enumeration of Eulerian triangulation slices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("two-point", parents=[common], help="coefficients of G_k")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--order", type=_non_negative, default=None)

    p = sub.add_parser("series", parents=[common], help="R_k, G_k, T_k, h4 or kernel coefficients")
    p.add_argument("--kind", choices=SERIES_KINDS, default="R")
    p.add_argument("--kmax", type=_positive, default=4)
    p.add_argument("--order", type=_non_negative, default=None)
    p.add_argument("--sweep", choices=("jacobi", "ascending", "descending"), default=None)

    p = sub.add_parser("hull-dist", parents=[common], help="distribution of the hull perimeter")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--pmax", type=_positive, default=None)
    p.add_argument("--k", type=_positive, default=None, help="finite k; omit for k = infinity")
    p.add_argument("--rescaled", action="store_true", help="add L = 2p/d^2 and the limiting density")

    p = sub.add_parser("hull-mean", parents=[common], help="mean hull perimeter")
    p.add_argument("--d", type=_positive, nargs="+", required=True)
    p.add_argument("--k", type=_positive, nargs="*", default=None)

    p = sub.add_parser("scaling", parents=[common], help="limit laws at large distances")
    p.add_argument("--d", type=_positive, default=200)
    p.add_argument("--tau", type=float, nargs="+", default=[0.5, 1.0, 2.0])
    p.add_argument("--u", type=float, nargs="*", default=None, help="mean profile at u = d/k instead")

    p = sub.add_parser("enumerate", parents=[common], help="brute-force map generation and counts")
    p.add_argument("--faces", type=_positive, required=True)
    p.add_argument("--k", type=_positive, default=None)
    p.add_argument("--d", type=_positive, default=None)
    p.add_argument("--dump", action="store_true", help="print one record per rooted map")
    p.add_argument("--progress", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="run verification suites and print the ledger")
    p.add_argument("--suite", action="append", default=None)
    p.add_argument("--orders", type=_positive, default=None)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        print(text, end="")
    else:
        out.write_text(text)
        logger.info(f"Wrote {out}")


def _apply_config_defaults(args: argparse.Namespace, config: AppConfig) -> None:
    """Fill flags left unset from the configuration file"""
    defaults = {"order": "series.order", "sweep": "series.sweep", "pmax": "statistics.p_max"}
    for flag, key in defaults.items():
        if getattr(args, flag, False) is None:
            setattr(args, flag, config.get(key))


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = AppConfig(args.config)
    precision = args.precision or config.get("numerics.precision", 50)
    if args.command == "verify":
        with working_precision(precision):
            return cmd_verify(args, config)

    output_format = args.format or config.get("output.format", "csv")
    digits = config.get("output.significant_digits", 12)
    _apply_config_defaults(args, config)
    try:
        with working_precision(precision):
            table = COMMANDS[args.command](args, config)
    except EngineError as e:
        logger.error(f"{args.command} failed: {e}")
        parser.exit(2, f"error: {e}\n")
    text = table.to_json(digits) if output_format == "json" else table.to_csv(digits)
    _emit(text, args.out)
    return 0

import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from mpmath import mp

from core.errors import DomainError
from ui.cli import Table, build_parser, format_number, run
from utils.precision import working_precision


def run_cli(repo_root, *args):
    return subprocess.run(
        [sys.executable, "main.py", *args],
        cwd=repo_root,
        capture_output=True,
        text=True,
        timeout=600,
    )


def rows_of(stdout):
    return list(csv.reader(io.StringIO(stdout)))


def test_format_number():
    assert format_number(12) == "12"
    assert format_number(Fraction(28, 45)) == "28/45"
    assert format_number(28 / 45) == "6.22222222222e-01"
    assert format_number(28 / 45, digits=4) == "6.222e-01"
    assert format_number(-1250.0) == "-1.25000000000e+03"
    assert format_number(float("inf")) == "inf"
    assert format_number(True) == "true"


def test_table_serialization():
    table = Table(["n", "value"], [(1, Fraction(1, 3)), (2, 0.5)], {"k": 2})
    assert table.to_csv(12) == "n,value\n1,1/3\n2,5.00000000000e-01\n"
    payload = json.loads(table.to_json(12))
    assert payload["k"] == 2
    assert payload["rows"] == [[1, "1/3"], [2, "5.00000000000e-01"]]


def test_parser_rejects_non_positive_k():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["two-point", "--k", "0"])


def test_two_point_csv(repo_root):
    result = run_cli(repo_root, "two-point", "--k", "1", "--order", "2")
    assert result.returncode == 0, result.stderr
    assert rows_of(result.stdout) == [["n", "coefficient"], ["0", "0"], ["1", "1"], ["2", "3"]]


def test_two_point_order_zero(repo_root):
    result = run_cli(repo_root, "two-point", "--k", "5", "--order", "0")
    assert rows_of(result.stdout)[1:] == [["0", "0"]]


def test_two_point_json(repo_root):
    result = run_cli(repo_root, "two-point", "--k", "2", "--order", "3", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["k"] == 2
    assert payload["coefficients"][:3] == [0, 1, 4]


def test_hull_distribution(repo_root):
    result = run_cli(repo_root, "hull-dist", "--d", "2", "--pmax", "1")
    assert result.returncode == 0, result.stderr
    assert rows_of(result.stdout)[1] == ["1", "6.22222222222e-01"]


def test_domain_error_exits_with_two(repo_root):
    result = run_cli(repo_root, "hull-dist", "--d", "1")
    assert result.returncode == 2
    assert "error:" in result.stderr


def test_enumerate_counts(repo_root):
    result = run_cli(repo_root, "enumerate", "--faces", "2")
    assert rows_of(result.stdout)[1] == ["2", "40", "9", "3"]


def test_verify_closed_form(repo_root, tmp_path):
    out = tmp_path / "ledger.json"
    result = run_cli(repo_root, "verify", "--suite", "closed-form", "--orders", "2", "--out", str(out))
    assert result.returncode == 0, result.stderr
    ledger = json.loads(out.read_text())
    assert ledger["passed"] is True
    assert ledger["suites"] == ["closed-form"]
    assert ledger["counts"]["fail"] == 0


def test_unset_flags_come_from_the_config(repo_root, tmp_path):
    config = tmp_path / "engine.json"
    config.write_text(json.dumps({"statistics": {"p_max": 3}, "output": {"format": "json"}}))
    result = run_cli(repo_root, "hull-dist", "--d", "4", "--config", str(config))
    assert result.returncode == 0, result.stderr
    payload = json.loads(result.stdout)
    assert [row[0] for row in payload["rows"]] == [1, 2, 3]


def test_precision_flag_is_scoped_to_the_command(tmp_path):
    out = tmp_path / "hull.csv"
    before = mp.dps
    assert run(["hull-dist", "--d", "2", "--pmax", "1", "--precision", "30", "--out", str(out)]) == 0
    assert mp.dps == before
    assert rows_of(out.read_text())[1] == ["1", "6.22222222222e-01"]


def test_working_precision_restores_the_previous_setting():
    before = mp.dps
    with working_precision(80) as digits:
        assert digits == 80
        assert mp.dps == 80
    assert mp.dps == before
    with pytest.raises(DomainError):
        with working_precision(0):
            pass
    assert mp.dps == before

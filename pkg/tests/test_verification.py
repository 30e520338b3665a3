import json

import pytest

from core.errors import EngineError
from core.verification import (
    FAIL,
    PASS,
    SKIPPED,
    CheckRecord,
    VerificationLedger,
    exact,
    guarded,
    numeric,
    run_suites,
)


def test_ledger_counts_and_exit_code():
    ledger = VerificationLedger()
    ledger.add(exact("one", "unit", True))
    ledger.add(numeric("two", "unit", 0.5, 1e-3))
    assert not ledger.passed
    assert ledger.exit_code == 1
    assert [c.name for c in ledger.failures] == ["two"]
    payload = json.loads(ledger.to_json())
    assert payload["counts"] == {PASS: 1, FAIL: 1, SKIPPED: 0}
    assert payload["checks"][0]["max_abs_error"] == "exact"
    assert payload["checks"][1]["max_abs_error"] == 0.5


def test_duplicate_names_are_refused():
    ledger = VerificationLedger()
    ledger.add(exact("same", "unit", True))
    with pytest.raises(EngineError):
        ledger.add(exact("same", "unit", True))


def test_guarded_turns_errors_into_failures():
    def broken() -> CheckRecord:
        raise ZeroDivisionError("boom")

    record = guarded("broken", "unit", broken)
    assert record.status == FAIL
    assert "ZeroDivisionError" in record.detail


def test_unknown_suite_is_skipped():
    ledger = run_suites(["no-such-suite"])
    assert ledger.passed
    assert ledger.checks[0].status == SKIPPED


def test_repeated_suite_names_run_once():
    ledger = run_suites(["no-such-suite", "series", "no-such-suite", "series"], orders=2)
    assert ledger.passed, [c.name for c in ledger.failures]
    assert [c.name for c in ledger.checks].count("suite no-such-suite") == 1
    assert len(ledger.checks) == 1 + len(run_suites(["series"], orders=2).checks)


@pytest.mark.parametrize("suite", ["series", "classical", "closed-form"])
def test_fast_suites_pass(suite):
    ledger = run_suites([suite], orders=2)
    assert ledger.passed, [c.name for c in ledger.failures]
    assert ledger.checks


@pytest.mark.parametrize("seed", [1, 7])
def test_series_suite_random_instances(seed):
    ledger = run_suites(["series"], orders=2, seed=seed)
    names = [c.name for c in ledger.checks]
    assert "ring axioms on random series" in names
    assert "random reversion round trip" in names
    assert ledger.passed, [c.detail for c in ledger.failures]

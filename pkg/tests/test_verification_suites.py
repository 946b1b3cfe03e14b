import json

import pytest

from hollab import verification_suites
from hollab.exceptions import BudgetExceeded, ContractViolation, VerificationFailure
from hollab.methodology import claims_for_suite
from hollab.reference_data import DEFAULT_SEED, REPORT_VERSION, SUITE_NAMES
from hollab.verification_suites import CheckResult, SuiteReport, run_suite, suite_checks


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_every_check_has_a_claim(name):
    assert suite_checks(name) == [c.id for c in claims_for_suite(name)]


def test_number_theory_suite_passes():
    report = run_suite("number-theory-lemmas")
    assert report.passed
    assert report.suite == "number-theory-lemmas"
    assert report.version == REPORT_VERSION
    assert report.seed == DEFAULT_SEED + SUITE_NAMES.index("number-theory-lemmas")
    assert [c.id for c in report.checks] == [f"NT-0{i}" for i in range(1, 8)]
    assert report.elapsed_ms is not None


def test_seed_override():
    assert run_suite("number-theory-lemmas", seed=7).seed == 7


def test_report_without_timing_is_reproducible():
    first = run_suite("number-theory-lemmas", timing=False).to_json(timing=False)
    second = run_suite("number-theory-lemmas", timing=False).to_json(timing=False)
    assert first == second
    payload = json.loads(first)
    assert sorted(payload) == ["checks", "seed", "suite", "version"]
    assert all("witness" not in c for c in payload["checks"])


def test_grid_replaces_the_default_points():
    assert suite_checks("homology-tables", {(3, 1): 3}) == ["HT-02"]
    assert suite_checks("homology-tables", {(2, 3): 3, (3, 1): 3}) == ["HT-01", "HT-02"]
    # (3, 1) has no mod-3 rank formula
    assert suite_checks("cohomology-ranks", {(3, 1): 3}) == []
    assert suite_checks("cohomology-ranks") == ["CR-01", "CR-02", "CR-03"]


def test_empty_grid_runs_nothing():
    report = run_suite("homology-tables", grid={})
    assert report.checks == []
    assert report.passed


def test_small_grid_run():
    report = run_suite("homology-tables", grid={(3, 1): 4})
    assert [c.id for c in report.checks] == ["HT-02"]
    assert report.passed


def test_grid_on_a_fixed_suite_is_rejected():
    with pytest.raises(ContractViolation, match="no parameter grid"):
        run_suite("bockstein", grid={(3, 1): 3})


def test_unknown_suite():
    with pytest.raises(ContractViolation, match="unknown suite"):
        run_suite("topology")


def test_check_result_serialization():
    assert CheckResult("NT-06", "Wilson's theorem", "pass").to_dict() == {
        "id": "NT-06", "anchor": "Wilson's theorem", "status": "pass"}
    failed = CheckResult("NT-06", "Wilson's theorem", "fail", {"p": 5})
    assert failed.to_dict()["witness"] == {"p": 5}
    assert not failed.passed


def test_report_collects_failures():
    report = SuiteReport("bockstein", REPORT_VERSION, 1, [
        CheckResult("BK-01", "a", "pass"),
        CheckResult("BK-02", "b", "fail", {"n": 1}),
    ], elapsed_ms=3)
    assert not report.passed
    assert [c.id for c in report.failures] == ["BK-02"]
    assert report.to_dict()["elapsed_ms"] == 3
    assert "elapsed_ms" not in report.to_dict(timing=False)


def test_failing_check_records_a_witness(monkeypatch):
    def broken(seed):
        raise VerificationFailure("Wilson product", {"p": 7, "computed": 1})

    def oversized(seed):
        raise BudgetExceeded("GL(4, Z/9)", 10 ** 9, 100)

    monkeypatch.setitem(verification_suites.SUITES, "number-theory-lemmas",
                        lambda grid: {"NT-06": broken, "NT-07": oversized})
    report = run_suite("number-theory-lemmas", seed=1)
    assert not report.passed
    wilson, table = report.checks
    assert wilson.status == "fail"
    assert wilson.anchor == "Wilson's theorem"
    assert wilson.witness == {"message": "Wilson product", "p": 7, "computed": 1}
    assert "budget 100" in table.witness["message"]

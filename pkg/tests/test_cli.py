import json

import pandas as pd
import pytest
from click.testing import CliRunner

from hollab import VERSION, cli as cli_module
from hollab.cli import cli, markdown_table, validate_homology_inputs, validate_rank_inputs
from hollab.homology_engine import AbelianInvariants


@pytest.fixture
def runner():
    return CliRunner()


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert VERSION in result.output


def test_degree_zero_is_a_single_row(runner):
    result = runner.invoke(cli, ["homology", "--p", "3", "--r", "1", "--qmax", "0"])
    assert result.exit_code == 0
    assert result.output.strip().splitlines() == [
        "| q | closed | computed | agree |",
        "|---|---|---|---|",
        "| 0 | Z | Z | agree |",
    ]


def test_symmetric_group_table_as_json(runner):
    result = runner.invoke(cli, ["homology", "--p", "3", "--r", "1", "--qmax", "3",
                                 "--mode", "closed", "--format", "json"])
    assert result.exit_code == 0
    rows = json.loads(result.output)
    assert [row["closed"] for row in rows] == ["Z", "Z/2", "0", "Z/2 + Z/3"]


def test_csv_output(runner):
    result = runner.invoke(cli, ["homology", "--p", "2", "--r", "3", "--qmax", "2",
                                 "--mode", "computed", "--format", "csv"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "q,computed"
    assert lines[2] == "1,Z/2 + Z/2 + Z/2"


@pytest.mark.parametrize("args,message", [
    (["--p", "2", "--r", "2"], "no closed formula for p=2, r=2"),
    (["--p", "4", "--r", "1"], "p must be prime"),
    (["--p", "3", "--r", "1", "--qmax", "13"], "qmax must lie in 0..12"),
])
def test_usage_errors_exit_with_two(runner, args, message):
    result = runner.invoke(cli, ["homology", *args])
    assert result.exit_code == 2
    assert message in result.output


def test_disagreement_exits_with_one(runner, monkeypatch):
    monkeypatch.setattr(cli_module, "closed_form_homology", lambda p, r, q: AbelianInvariants(0, (5,)))
    result = runner.invoke(cli, ["homology", "--p", "3", "--r", "1", "--qmax", "1"])
    assert result.exit_code == 1
    assert "differ" in result.output


def test_cohomology_ranks(runner):
    result = runner.invoke(cli, ["cohomology-ranks", "--p", "2", "--r", "3", "--qmax", "4", "--format", "json"])
    assert result.exit_code == 0
    rows = json.loads(result.output)
    assert [row["rank"] for row in rows] == [1, 3, 5, 7, 10]
    assert {row["agree"] for row in rows} == {"agree"}


def test_cohomology_ranks_need_r_at_least_three_for_odd_p(runner):
    result = runner.invoke(cli, ["cohomology-ranks", "--p", "3", "--r", "1"])
    assert result.exit_code == 2
    assert "needs r >= 3" in result.output


def test_dickson(runner):
    result = runner.invoke(cli, ["dickson", "--n", "1", "--p", "2"])
    assert result.exit_code == 0
    assert "f       = v1" in result.output
    assert "bidegree = (2, 1)" in result.output


def test_dickson_rejects_composite_p(runner):
    result = runner.invoke(cli, ["dickson", "--n", "1", "--p", "6"])
    assert result.exit_code == 2


def test_congruence_checks(runner):
    result = runner.invoke(cli, ["congruence", "--n", "1", "--k", "1", "--p", "3",
                                 "--check", "order", "--check", "omega", "--format", "csv"])
    assert result.exit_code == 0
    assert "order,pass" in result.output
    assert "omega,pass" in result.output


def test_congruence_budget_is_a_usage_error(runner):
    result = runner.invoke(cli, ["congruence", "--n", "3", "--k", "2", "--p", "3"])
    assert result.exit_code == 2
    assert "too large" in result.output


def test_congruence_argument_validation(runner):
    result = runner.invoke(cli, ["congruence", "--n", "0", "--p", "3"])
    assert result.exit_code == 2
    assert "n must be >= 1" in result.output


def test_verify_report_without_timing(runner):
    args = ["verify", "--suite", "number-theory-lemmas", "--no-timing"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.output == second.output
    report = json.loads(first.output)
    assert report["suite"] == "number-theory-lemmas"
    assert "elapsed_ms" not in report
    assert {c["status"] for c in report["checks"]} == {"pass"}


def test_verify_markdown(runner):
    result = runner.invoke(cli, ["verify", "--suite", "number-theory-lemmas", "--format", "markdown"])
    assert result.exit_code == 0
    assert "| NT-01 |" in result.output


def test_verify_unknown_suite(runner):
    result = runner.invoke(cli, ["verify", "--suite", "topology"])
    assert result.exit_code == 2


def test_input_validators():
    assert validate_homology_inputs(3, 2, 6) == (True, [])
    ok, errors = validate_homology_inputs(2, 0, 20)
    assert not ok and len(errors) == 2
    assert validate_rank_inputs(3, 3, 4)[0]
    assert not validate_rank_inputs(3, 2, 4)[0]


def test_markdown_table():
    assert markdown_table(pd.DataFrame([{"a": 1, "b": "x"}])) == "| a | b |\n|---|---|\n| 1 | x |"

"""
Command-line interface for hollab.

Usage:
    hollab homology --p 2 --r 3 --qmax 6 --mode both
    hollab cohomology-ranks --p 2 --r 4 --qmax 8
    hollab dickson --n 2 --p 2 --mode r3
    hollab congruence --n 1 --k 2 --p 3 --check order --check power-map
    hollab verify --suite dickson-noncollapse

Exit codes: 0 when every check passes, 1 when a check fails, 2 on a usage
error (unsupported or oversized parameters). Tables go to stdout and
diagnostics to stderr.
"""
from __future__ import annotations

import functools
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import click
import pandas as pd
from sympy import isprime

from . import VERSION
from .congruence_lie import (
    almost_powerfully_embedded_check,
    bockstein_square_zero,
    bracket_matches_commutator,
    gamma_closure_check,
    gamma_enumerate,
    gamma_order,
    gamma_order_from_gl,
    jacobi_check,
    omega1_and_kernel_check,
    p_power_bijection_check,
    structure_constants_check,
)
from .exceptions import BudgetExceeded, ContractViolation, UnsupportedCase, VerificationFailure
from .graded_invariants import D2_MODES, apply_d2, default_mode, dickson_coefficient, noncollapse_bidegree
from .homology_engine import (
    closed_form_homology,
    computed_homology,
    mod_p_cohomology_ranks,
    supported_homology,
    uct_ranks,
)
from .reference_data import MAX_HOMOLOGY_DEGREE, SUITE_NAMES
from .run_logger import run_log
from .verification_suites import SuiteReport, run_suite

__all__ = [
    "cli",
]

OUTPUT_FORMATS = ("markdown", "csv", "json")
HOMOLOGY_MODES = ("computed", "closed", "both")
AGREE, DIFFER = "agree", "differ"
USAGE_ERRORS = (UnsupportedCase, ContractViolation, BudgetExceeded)


# =============================================================================
# INPUT VALIDATION
# =============================================================================

def validate_homology_inputs(p: int, r: int, qmax: int) -> Tuple[bool, List[str]]:
    errors: List[str] = []
    if not isprime(p):
        errors.append(f"p must be prime (got {p})")
    if r < 1:
        errors.append("r must be >= 1")
    if not 0 <= qmax <= MAX_HOMOLOGY_DEGREE:
        errors.append(f"qmax must lie in 0..{MAX_HOMOLOGY_DEGREE}")
    if not errors and not supported_homology(p, r):
        errors.append(f"no closed formula for p={p}, r={r}")
    return len(errors) == 0, errors


def validate_rank_inputs(p: int, r: int, qmax: int) -> Tuple[bool, List[str]]:
    ok, errors = validate_homology_inputs(p, r, qmax)
    if ok and p > 2 and r < 3:
        errors.append(f"no mod-p rank formula for p={p}, r={r} (needs r >= 3)")
    return len(errors) == 0, errors


def validate_congruence_inputs(n: int, k: int, p: int) -> Tuple[bool, List[str]]:
    errors: List[str] = []
    if n < 1:
        errors.append("n must be >= 1")
    if k < 1:
        errors.append("k must be >= 1")
    if not isprime(p):
        errors.append(f"p must be prime (got {p})")
    return len(errors) == 0, errors


def validate_suite_name(name: str) -> Tuple[bool, List[str]]:
    if name in SUITE_NAMES:
        return True, []
    return False, [f"unknown suite {name!r}"]


def _fail_usage(validation_type: str, errors: Sequence[str]):
    run_log.log_validation_error(validation_type, list(errors))
    for message in errors:
        click.echo(f"Error: {message}", err=True)
    sys.exit(2)


def _handle_errors(command: Callable) -> Callable:
    """Map library errors onto exit codes 2 (usage) and 1 (failed check)."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except USAGE_ERRORS as e:
            run_log.log_error(type(e).__name__, str(e), {"command": command.__name__})
            click.echo(f"Error: {e}", err=True)
            sys.exit(2)
        except VerificationFailure as e:
            click.echo(f"Check failed: {e}", err=True)
            click.echo(json.dumps(e.witness, indent=2, sort_keys=True, default=str), err=True)
            sys.exit(1)
    return wrapper


# =============================================================================
# TABLES
# =============================================================================

def homology_table(p: int, r: int, qmax: int, mode: str = "both") -> pd.DataFrame:
    """One row per degree; ``both`` adds the agreement column."""
    if mode not in HOMOLOGY_MODES:
        raise ContractViolation(f"unknown mode {mode!r}; expected one of {HOMOLOGY_MODES}")
    rows: List[Dict[str, object]] = []
    computed = computed_homology(p, r, qmax) if mode != "closed" else {}
    for q in range(qmax + 1):
        row: Dict[str, object] = {"q": q}
        if mode != "computed":
            row["closed"] = str(closed_form_homology(p, r, q))
        if mode != "closed":
            row["computed"] = str(computed[q])
        if mode == "both":
            row["agree"] = AGREE if row["closed"] == row["computed"] else DIFFER
        rows.append(row)
    run_log.log_computation("homology", {"p": p, "r": r, "qmax": qmax, "mode": mode}, {"rows": len(rows)})
    return pd.DataFrame(rows)


def cohomology_rank_table(p: int, r: int, qmax: int) -> pd.DataFrame:
    """Formula ranks next to the universal-coefficient ranks of the computed homology."""
    uct = uct_ranks(computed_homology(p, r, qmax), p)
    rows = []
    for q in range(qmax + 1):
        rank = mod_p_cohomology_ranks(p, r, q)
        rows.append({"q": q, "rank": rank, "uct": uct[q], "agree": AGREE if rank == uct[q] else DIFFER})
    run_log.log_computation("cohomology_ranks", {"p": p, "r": r, "qmax": qmax}, {"ranks": [row["rank"] for row in rows]})
    return pd.DataFrame(rows)


def markdown_table(df: pd.DataFrame) -> str:
    lines = ["| " + " | ".join(str(c) for c in df.columns) + " |",
             "|" + "|".join("---" for _ in df.columns) + "|"]
    for row in df.itertuples(index=False):
        lines.append("| " + " | ".join(str(v) for v in row) + " |")
    return "\n".join(lines)


def render_table(df: pd.DataFrame, fmt: str) -> str:
    if fmt == "csv":
        return df.to_csv(index=False)
    if fmt == "json":
        return df.to_json(orient="records", indent=2)
    return markdown_table(df)


def report_table(report: SuiteReport) -> pd.DataFrame:
    return pd.DataFrame(
        [{"id": c.id, "anchor": c.anchor, "status": c.status} for c in report.checks],
        columns=["id", "anchor", "status"],
    )


# =============================================================================
# COMMANDS
# =============================================================================

@click.group()
@click.version_option(version=VERSION, prog_name="hollab")
def cli():
    """
    Holomorph lab - homology, cohomology rings and structural checks for
    holomorphs of finite abelian groups.

    Examples:

        hollab homology --p 3 --r 1 --qmax 4

        hollab verify --suite number-theory-lemmas
    """


@cli.command("homology")
@click.option("--p", "p", type=int, required=True, help="Prime p")
@click.option("--r", "r", type=int, required=True, help="Exponent r of Z/p^r")
@click.option("--qmax", type=int, default=6, show_default=True, help="Highest degree")
@click.option("--mode", type=click.Choice(HOMOLOGY_MODES), default="both", show_default=True)
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), default="markdown", show_default=True)
@_handle_errors
def cmd_homology(p: int, r: int, qmax: int, mode: str, fmt: str):
    """Integral homology H_q(Hol(Z/p^r); Z) for q <= qmax."""
    ok, errors = validate_homology_inputs(p, r, qmax)
    if not ok:
        _fail_usage("homology", errors)
    df = homology_table(p, r, qmax, mode)
    click.echo(render_table(df, fmt))
    if "agree" in df.columns and (df["agree"] != AGREE).any():
        sys.exit(1)


@cli.command("cohomology-ranks")
@click.option("--p", "p", type=int, required=True, help="Prime p")
@click.option("--r", "r", type=int, required=True, help="Exponent r of Z/p^r")
@click.option("--qmax", type=int, default=8, show_default=True, help="Highest degree")
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), default="markdown", show_default=True)
@_handle_errors
def cmd_cohomology_ranks(p: int, r: int, qmax: int, fmt: str):
    """dim H^q(Hol(Z/p^r); F_p), by formula and from the computed homology."""
    ok, errors = validate_rank_inputs(p, r, qmax)
    if not ok:
        _fail_usage("cohomology-ranks", errors)
    df = cohomology_rank_table(p, r, qmax)
    click.echo(render_table(df, fmt))
    if (df["agree"] != AGREE).any():
        sys.exit(1)


@cli.command("dickson")
@click.option("--n", "n", type=int, required=True, help="Rank n of the base group")
@click.option("--p", "p", type=int, required=True, help="Prime p")
@click.option("--mode", type=click.Choice(D2_MODES), default=None,
              help="d2 convention (default: r>3 for p = 2, odd otherwise)")
@_handle_errors
def cmd_dickson(n: int, p: int, mode: Optional[str]):
    """Dickson coefficient and its d2 image in the Serre spectral sequence."""
    if not isprime(p):
        _fail_usage("dickson", [f"p must be prime (got {p})"])
    mode = mode or default_mode(p)
    f = dickson_coefficient(n, p, mode)
    image = apply_d2(f, mode)
    click.echo(f"f       = {f}")
    click.echo(f"d2(f)   = {image}")
    if image.is_zero():
        click.echo("d2(f) vanishes", err=True)
        sys.exit(1)
    click.echo(f"bidegree = {noncollapse_bidegree(n, p, mode)}")
    run_log.log_computation("dickson", {"n": n, "p": p, "mode": mode}, {"d2": str(image)})


def _order_check(n: int, k: int, p: int) -> bool:
    counted = sum(1 for _ in gamma_enumerate(n, k, p))
    return counted == gamma_order(n, k, p) == gamma_order_from_gl(n, k, p)


CONGRUENCE_CHECKS: Dict[str, Callable[[int, int, int], bool]] = {
    "order": _order_check,
    "closure": lambda n, k, p: gamma_closure_check(n, k, p),
    "omega": omega1_and_kernel_check,
    "power-map": p_power_bijection_check,
    "bracket": lambda n, k, p: bracket_matches_commutator(n, p),
    "structure": lambda n, k, p: structure_constants_check(n, p),
    "jacobi": lambda n, k, p: jacobi_check(n, p),
    "bockstein": lambda n, k, p: bockstein_square_zero(n, p),
    "powerful": almost_powerfully_embedded_check,
}


@cli.command("congruence")
@click.option("--n", "n", type=int, required=True, help="Matrix size n")
@click.option("--k", "k", type=int, default=1, show_default=True, help="Level k (modulus p^(k+1))")
@click.option("--p", "p", type=int, required=True, help="Prime p")
@click.option("--check", "checks", type=click.Choice(list(CONGRUENCE_CHECKS)), multiple=True,
              default=("order",), show_default=True, help="Checks to run (repeatable)")
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), default="markdown", show_default=True)
@_handle_errors
def cmd_congruence(n: int, k: int, p: int, checks: Tuple[str, ...], fmt: str):
    """Structural checks on the congruence subgroup Gamma_{n,k} of Hol((Z/p^(k+1))^n)."""
    ok, errors = validate_congruence_inputs(n, k, p)
    if not ok:
        _fail_usage("congruence", errors)
    rows = [{"check": name, "result": "pass" if CONGRUENCE_CHECKS[name](n, k, p) else "fail"}
            for name in dict.fromkeys(checks)]
    df = pd.DataFrame(rows)
    click.echo(f"|Gamma_{{{n},{k}}}| = {gamma_order(n, k, p)}", err=True)
    click.echo(render_table(df, fmt))
    if (df["result"] != "pass").any():
        sys.exit(1)


@cli.command("verify")
@click.option("--suite", type=click.Choice(SUITE_NAMES + ("all",)), default="all", show_default=True)
@click.option("--seed", type=int, default=None, help="Override the suite's fixed seed")
@click.option("--format", "fmt", type=click.Choice(OUTPUT_FORMATS), default="json", show_default=True)
@click.option("--no-timing", is_flag=True, help="Leave elapsed_ms out, for byte-identical reports")
@_handle_errors
def cmd_verify(suite: str, seed: Optional[int], fmt: str, no_timing: bool):
    """Run a named verification suite (or all of them) and print the report."""
    names = SUITE_NAMES if suite == "all" else (suite,)
    run_log.log_user_action("verify", {"suite": suite, "seed": seed})
    reports = [run_suite(name, seed, timing=not no_timing) for name in names]
    if fmt == "json":
        payload = [r.to_dict(not no_timing) for r in reports]
        click.echo(json.dumps(payload if suite == "all" else payload[0], indent=2, sort_keys=True, default=str))
    else:
        for report in reports:
            if fmt == "markdown":
                click.echo(f"## {report.suite} (seed {report.seed})\n")
            click.echo(render_table(report_table(report), fmt))
    for report in reports:
        for failure in report.failures:
            click.echo(f"FAIL {report.suite} {failure.id}: {failure.witness}", err=True)
    if not all(r.passed for r in reports):
        sys.exit(1)


if __name__ == "__main__":
    cli()

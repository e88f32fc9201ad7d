"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Criteria 1-8 run the full default grids through the selfcheck suites;
criterion 9 drives the CLI selfcheck end-to-end in a subprocess.
"""

import subprocess
import sys
import time

from iwagrowth.selfcheck import (
    check_asymptotic_law,
    check_convergence_gaps,
    check_growth_closed_forms,
    check_growth_composition,
    check_matrix_structure,
    check_rank_oracles,
    check_valuation_tables,
    check_witness_mapping,
)


def report(result, budget_seconds=None):
    print(result.line())
    assert result.passed, result.detail
    if budget_seconds is not None:
        assert result.seconds < budget_seconds, \
            f"took {result.seconds:.0f}s, budget {budget_seconds}s"


def test_criterion_1_valuation_tables():
    report(check_valuation_tables(), budget_seconds=300)


def test_criterion_2_matrix_structure():
    report(check_matrix_structure())


def test_criterion_3_witness_mapping():
    report(check_witness_mapping())


def test_criterion_4_rank_oracle_agreement():
    report(check_rank_oracles(), budget_seconds=120)


def test_criterion_5_asymptotic_law():
    report(check_asymptotic_law())


def test_criterion_6_growth_closed_forms():
    report(check_growth_closed_forms(), budget_seconds=60)


def test_criterion_7_growth_composition():
    report(check_growth_composition())


def test_criterion_8_convergence_gaps():
    report(check_convergence_gaps())


def test_criterion_9_cli_selfcheck():
    t0 = time.time()
    proc = subprocess.run(
        [sys.executable, "-m", "iwagrowth.cli", "selfcheck",
         "--p", "3,5,7", "--n-max", "9", "--seed", "0"],
        capture_output=True,
        text=True,
        timeout=600,
    )
    elapsed = time.time() - t0
    status = "PASS" if proc.returncode == 0 else "FAIL"
    print(f"criterion 9 (cli selfcheck end-to-end): {status} [{elapsed:.1f}s]")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert elapsed < 600
    assert len([l for l in proc.stdout.splitlines() if "PASS" in l]) == 8

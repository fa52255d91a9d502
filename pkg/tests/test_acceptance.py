"""The acceptance gate: one test per criterion, each printing its
pass/fail line.  Run with ``pytest tests/test_acceptance.py -s`` to see
the table, or via the CLI: ``circodes sweep --suite paper-acceptance
--out report.json``."""

import pytest

from circodes import sweep


def _report(result):
    mark = "PASS" if result.passed else "FAIL"
    print(f"\ncriterion {result.number}: {mark} - {result.title} ({result.seconds:.1f}s)")
    for line in result.details:
        print(f"  {line}")
    assert result.passed, f"criterion {result.number} failed: {result.details}"


def test_criterion_1_construction_sweep():
    _report(sweep.criterion_1())


def test_criterion_2_optimality_equalities():
    _report(sweep.criterion_2())


def test_criterion_3_solver_exact_values():
    _report(sweep.criterion_3())


def test_criterion_4_solver_vs_exhaustive_oracle():
    _report(sweep.criterion_4())


def test_criterion_5_strict_nonattainment():
    _report(sweep.criterion_5())


def test_criterion_6_grid_transport():
    _report(sweep.criterion_6())


def test_criterion_7_identification_band():
    _report(sweep.criterion_7())


def test_criterion_8_property_suites():
    _report(sweep.criterion_8())


def test_sweep_driver_runs_everything():
    results = sweep.run_suite()
    assert [r.number for r in results] == list(range(1, 9))
    table = sweep.render_table(results)
    assert "PASS" in table
    assert all(r.passed for r in results), table


@pytest.mark.parametrize("jobs", [2])
def test_parallel_jobs_do_not_change_results(jobs):
    serial = sweep.criterion_3(jobs=1)
    parallel = sweep.criterion_3(jobs=jobs)
    assert serial.passed and parallel.passed
    assert serial.details == parallel.details

import pytest

from classifier.families import T_JOIN, TRIPARTITE
from graphs.components.graph6 import parse_graph6
from utils.errors import GroebnerBudgetExhausted
from utils.report_storage import validate_report
from verification import CaseRecord, VerificationReport, VerificationSuiteResult, run_cases, verify_all
from verification.components import cases
from verification.suites import SUITES, g2_sweep, matching_params, random_graph6


@cases.case
def budget_check(item):
    raise GroebnerBudgetExhausted(10, 10, 3)


@cases.case
def broken_check(item):
    raise ValueError("no such graph")


def square(x: int) -> int:
    if x < 0:
        raise ValueError("negative")
    return x * x


def test_case_decorator_records_budget_events():
    record = budget_check("Bw")
    assert record.key == "Bw"
    assert not record.passed
    assert record.budget_event
    assert "I_3" in record.error


def test_case_decorator_records_errors():
    record = broken_check(("Kmn", (2, 3)))
    assert record.key == "Kmn(2, 3)"
    assert record.error == "ValueError: no such graph"
    assert not record.budget_event


def test_run_cases_inline_keeps_order_and_exceptions():
    results = run_cases(square, [3, -1, 2], jobs=1, progress=False)
    assert results[0] == 9 and results[2] == 4
    assert isinstance(results[1], ValueError)


def test_suite_result_counts():
    result = VerificationSuiteResult(suite="V0", description="demo", cases=[
        CaseRecord(key="a", passed=True),
        CaseRecord(key="b", passed=False, budget_event=True),
    ])
    assert not result.passed
    assert result.failures == 1
    assert result.budget_events == 1
    assert [r.key for r in result.failed_cases()] == ["b"]
    dumped = result.model_dump()
    assert dumped["passed"] is False and dumped["failures"] == 1


def test_g2_sweep_items():
    items = g2_sweep(3)
    assert (TRIPARTITE, (1, 1, 1)) in items
    assert (T_JOIN, (1, 2, 0)) in items
    assert (TRIPARTITE, (1, 2, 0)) not in items
    assert all(2 <= sum(params) <= 3 for _, params in items)
    assert len(items) == 7


def test_random_graphs_are_reproducible():
    first = random_graph6(5, 4, seed=7)
    assert first == random_graph6(5, 4, seed=7)
    assert all(1 <= parse_graph6(text).n <= 4 for text in first)


def test_individual_cases():
    assert cases.gamma_le1_case("Bw").passed
    assert cases.gamma_le2_case("Cr").passed
    assert cases.f2_critical_case("P4").passed
    assert cases.matching_group_case((5, 2)).passed
    assert cases.minor_table_case(("Kmn", (2, 2))).passed
    assert cases.i3_case(("Kmno", (2, 1, 1))).passed
    assert cases.g2_case((TRIPARTITE, (2, 2, 2))).passed
    assert cases.f1_fact_case(("Bw", 1)).passed


def test_property_case():
    record = cases.property_case(("Cr", "Bw"))
    assert record.passed, record.computed
    assert set(record.computed) >= {"nesting", "monotone", "additive", "gamma<=f1", "determinantal"}


def test_verify_all_subset():
    report = verify_all(n_max=4, sweep_bound=4, suites=["V1", "V9"], jobs=1)
    assert [s.suite for s in report.suites] == ["V1", "V9"]
    assert len(report.suites[0].cases) == 1 + 1 + 2 + 6
    assert report.passed
    assert report.summary().splitlines()[-1] == "overall: PASS"
    assert all(s.seconds is None for s in report.suites)
    validate_report(report.model_dump(mode="json"))


def test_verify_all_records_timings_on_request():
    report = verify_all(n_max=3, sweep_bound=2, suites=["V1"], jobs=1, timings=True)
    assert report.suites[0].seconds is not None


@pytest.mark.parametrize("kwargs", [
    {"n_max": 8},
    {"n_max": 0},
    {"sweep_bound": 10},
    {"suites": ["V42"]},
])
def test_verify_all_rejects_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        verify_all(**kwargs)


def test_matching_params_keep_n_two_as_skipped():
    assert matching_params(5) == [(2, 1), (3, 1), (4, 1), (5, 1), (5, 2)]
    record = cases.matching_group_case((2, 1))
    assert record.passed
    assert record.key == "K2-M1"
    assert "no closed form" in record.skipped
    assert cases.matching_group_case((5, 2)).skipped is None


def test_suite_registry():
    assert list(SUITES) == ["V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "V9", "P1"]


def test_report_round_trip():
    report = VerificationReport(n_max=3, sweep_bound=4)
    assert report.passed
    assert VerificationReport.model_validate_json(report.model_dump_json()).n_max == 3


@pytest.mark.slow
def test_seven_vertex_example():
    record = cases.example7_case("example7")
    assert record.passed, record.computed
    assert record.computed["gamma"] == 5
    assert record.computed["unit 5-minors"] == 0
    assert record.computed["5-minors scanned"] == 441
    assert len(record.computed["pair"]) == 2


@pytest.mark.slow
def test_full_verification():
    report = verify_all(n_max=6, sweep_bound=6, jobs=1)
    assert report.passed, report.summary()

from typing import Any, Dict, List, Optional
from pydantic import BaseModel, computed_field


class CaseRecord(BaseModel):
    """One checked input; `key` replays it (a graph6 string or a family with its parameters)."""

    key: str
    inputs: Dict[str, Any] = {}
    expected: Any = None
    computed: Any = None
    passed: bool
    error: Optional[str] = None
    budget_event: bool = False
    skipped: Optional[str] = None


class VerificationSuiteResult(BaseModel):
    suite: str
    description: str
    cases: List[CaseRecord] = []
    seconds: Optional[float] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @computed_field
    @property
    def failures(self) -> int:
        return sum(1 for case in self.cases if not case.passed)

    @computed_field
    @property
    def budget_events(self) -> int:
        return sum(1 for case in self.cases if case.budget_event)

    def failed_cases(self) -> List[CaseRecord]:
        return [case for case in self.cases if not case.passed]


class VerificationReport(BaseModel):
    n_max: int
    sweep_bound: int
    suites: List[VerificationSuiteResult] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    def summary(self) -> str:
        lines = [
            f"{s.suite:<4} {'PASS' if s.passed else 'FAIL'}  {len(s.cases) - s.failures}/{len(s.cases)}  {s.description}"
            for s in self.suites
        ]
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

"""Structured pass/fail results for identity suites."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


@dataclass
class CheckResult:
    suite: str
    case: str
    status: str
    residual: Union[float, str]
    params: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"suite": self.suite, "case": self.case, "status": self.status,
                "residual": self.residual, "params": self.params}


@dataclass
class CheckReport:
    suite: str
    results: list = field(default_factory=list)

    def add(self, case: str, ok: bool, residual: Any = 0, params: dict | None = None,
            status: str | None = None) -> CheckResult:
        if status is None:
            status = PASS if ok else FAIL
        if not isinstance(residual, (int, float)):
            residual = str(residual)
        res = CheckResult(self.suite, case, status, residual, dict(params or {}))
        self.results.append(res)
        return res

    def extend(self, other: "CheckReport"):
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if r.status == FAIL]

    def worst_residual(self):
        """Largest numeric residual, or the first nonzero exact one."""
        numeric = [abs(r.residual) for r in self.results if isinstance(r.residual, (int, float))]
        exact = [r.residual for r in self.results
                 if isinstance(r.residual, str) and r.residual not in ("0", "")]
        if exact:
            return exact[0]
        return max(numeric, default=0.0)

    def as_dicts(self) -> list:
        return [r.as_dict() for r in self.results]

    def summary(self) -> str:
        n_fail = len(self.failures)
        state = "PASS" if self.passed else "FAIL"
        return f"{state} {self.suite}: {len(self.results)} cases, {n_fail} failed, worst residual {self.worst_residual()}"

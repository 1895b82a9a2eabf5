import json
import math
from typing import Any, Dict, List

from pydantic import Field, PositiveFloat

from ..utils.pydantic_base_model import CamelBaseModel


class ResidualCheck(CamelBaseModel):
    name: str
    value: float
    tol: PositiveFloat
    passed: bool = Field(..., alias="pass")

    @classmethod
    def evaluate(cls, name: str, value: float, tol: float) -> "ResidualCheck":
        """A check passes iff its value is finite and below the tolerance."""
        value = float(value)
        return cls(name=name, value=value, tol=tol, passed=math.isfinite(value) and value < tol)


class ResidualReport(CamelBaseModel):
    """
    Named residuals of one verification run. Mathematical failures are entries with `pass = false`, never exceptions.

    >>> report = ResidualReport()
    >>> _ = report.add("identity", 1e-12, 1e-8)
    >>> report.passed
    True
    >>> _ = report.add("broken", 0.5, 1e-8)
    >>> report.passed, report.failures()
    (False, ['broken'])
    """

    checks: List[ResidualCheck] = []
    context: Dict[str, Any] = {}

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, value: float, tol: float) -> ResidualCheck:
        check = ResidualCheck.evaluate(name, value, tol)
        self.checks.append(check)
        return check

    def merge(self, other: "ResidualReport", prefix: str = "") -> "ResidualReport":
        checks = [check.copy(update={"name": prefix + check.name}) for check in other.checks]
        # keys already present win
        return ResidualReport(checks=self.checks + checks, context={**other.context, **self.context})

    def failures(self) -> List[str]:
        return [check.name for check in self.checks if not check.passed]

    def __getitem__(self, name: str) -> ResidualCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        # non-finite values are written as null, JSON has no NaN
        checks = []
        for check in self.checks:
            entry = check.dict(by_alias=True)
            if not math.isfinite(entry["value"]):
                entry["value"] = None
            checks.append(entry)
        return {"checks": checks, "pass": self.passed, "context": self.context}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

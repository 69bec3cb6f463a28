"""Base verification suite interface."""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float
    tolerance: Optional[float]
    info: dict = field(default_factory=dict)


class BaseCheck(ABC):
    name: str = "base"

    def __init__(self, params: Optional[dict] = None):
        self.params = {**self.default_params(), **(params or {})}

    @abstractmethod
    def default_params(self) -> dict:
        raise NotImplementedError

    @abstractmethod
    def run(self, seed: int) -> list[CheckResult]:
        raise NotImplementedError

    def _result(
        self,
        name: str,
        residual: float,
        tolerance: float,
        passed: Optional[bool] = None,
        **info,
    ) -> CheckResult:
        if passed is None:
            passed = residual < tolerance
        return CheckResult(
            name=name,
            passed=bool(passed),
            residual=float(residual),
            tolerance=tolerance,
            info=info,
        )

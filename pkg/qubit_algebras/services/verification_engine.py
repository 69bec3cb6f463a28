"""Verification suite registry and runner."""
from __future__ import annotations

from typing import Optional

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.checks.car_relations import CarRelationsCheck
from qubit_algebras.checks.convolution_algebra import ConvolutionCheck
from qubit_algebras.checks.equivalence import EquivalenceCheck
from qubit_algebras.checks.groupoid_axioms import GroupoidAxiomsCheck
from qubit_algebras.checks.monomorphism import MonomorphismCheck
from qubit_algebras.checks.oracle import OracleCheck
from qubit_algebras.checks.rank import RankCheck
from qubit_algebras.checks.representation import RepresentationCheck
from qubit_algebras.config import settings
from qubit_algebras.models.enums import CheckStatus
from qubit_algebras.models.schemas import CheckDetail, RunReport
from qubit_algebras.utils.logger import get_logger

logger = get_logger(__name__)

SUITES: dict[str, type[BaseCheck]] = {
    "car_relations": CarRelationsCheck,
    "rank": RankCheck,
    "equivalence": EquivalenceCheck,
    "groupoid_axioms": GroupoidAxiomsCheck,
    "convolution": ConvolutionCheck,
    "monomorphism": MonomorphismCheck,
    "representation": RepresentationCheck,
    "oracle": OracleCheck,
}


def _plain(value):
    if isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, "value"):
        return value.value
    return str(value)


def to_detail(result: CheckResult, prefix: str = "") -> CheckDetail:
    return CheckDetail(
        name=f"{prefix}{result.name}",
        status=CheckStatus.PASS if result.passed else CheckStatus.FAIL,
        residual=result.residual,
        tolerance=result.tolerance,
        info={k: _plain(v) for k, v in result.info.items()},
    )


def build_report(command: str, details: list[CheckDetail], seed: Optional[int] = None) -> RunReport:
    passed = all(d.status == CheckStatus.PASS for d in details)
    return RunReport(
        command=command,
        status=CheckStatus.PASS if passed else CheckStatus.FAIL,
        max_residual=max((d.residual for d in details), default=0.0),
        seed=seed,
        details=details,
    )


class VerificationEngine:
    def __init__(self) -> None:
        enabled = set(settings.enabled_suite_list)
        self._suite_enabled: dict[str, bool] = {name: name in enabled for name in SUITES}
        self._suite_params: dict[str, dict] = {}

    def set_suite_enabled(self, name: str, enabled: bool) -> None:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        self._suite_enabled[name] = enabled

    def set_suite_params(self, name: str, params: dict) -> None:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        self._suite_params[name] = params

    def get_suite_status(self) -> list[dict]:
        return [{"name": name, "enabled": self._suite_enabled[name]} for name in SUITES]

    def run_suite(self, name: str, seed: Optional[int] = None, params: Optional[dict] = None) -> RunReport:
        seed = settings.DEFAULT_SEED if seed is None else seed
        merged = {**self._suite_params.get(name, {}), **(params or {})}
        check = SUITES[name](merged)
        details = [to_detail(r) for r in check.run(seed)]
        report = build_report(name, details, seed)
        logger.info(
            "suite_finished",
            suite=name,
            status=report.status.value,
            max_residual=report.max_residual,
            checks=len(details),
        )
        return report

    def run_all(self, seed: Optional[int] = None) -> RunReport:
        seed = settings.DEFAULT_SEED if seed is None else seed
        details: list[CheckDetail] = []
        for name in SUITES:
            if not self._suite_enabled.get(name, True):
                logger.info("suite_skipped_disabled", suite=name)
                continue
            sub = self.run_suite(name, seed)
            details.extend(d.model_copy(update={"name": f"{name}.{d.name}"}) for d in sub.details)
        report = build_report("verify-all", details, seed)
        logger.info("verify_all_finished", status=report.status.value, checks=len(details))
        return report

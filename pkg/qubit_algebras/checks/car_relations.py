"""Canonical anticommutation relations of the Jordan-Wigner generators."""
from __future__ import annotations

import itertools

import numpy as np

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.config import settings
from qubit_algebras.core.car_fermions import (
    annihilator,
    annihilator_without_chain,
    car_relations_check,
    number_operator,
)
from qubit_algebras.core.operator_strings import string_mul
from qubit_algebras.oracle.dense import kron_string


class CarRelationsCheck(BaseCheck):
    name = "car_relations"

    def default_params(self) -> dict:
        return {"sites": settings.CAR_MAX_SITES, "control_sites": 2, "number_sites": 6}

    def run(self, seed: int) -> list[CheckResult]:
        tol = settings.PROPERTY_TOL
        n = self.params["sites"]
        report = car_relations_check(n)
        results = [
            self._result(
                "car_relations",
                report.max_residual,
                tol,
                passed=report.passed,
                sites=n,
                failures=len(report.failures),
            )
        ]

        control = car_relations_check(self.params["control_sites"], annihilator_without_chain)
        results.append(
            self._result(
                "negative_control_rejected",
                0.0 if not control.passed else control.max_residual,
                tol,
                passed=not control.passed,
                control_residual=control.max_residual,
            )
        )

        m = min(self.params["number_sites"], n, settings.ORACLE_MAX_SITES)
        results.append(self._number_operators(m))
        return results

    def _number_operators(self, m: int) -> CheckResult:
        tol = settings.REPRESENTATION_TOL
        dense = {s: kron_string(m, number_operator(s)) for s in range(1, m + 1)}
        worst = 0.0
        for s in range(1, m + 1):
            square = kron_string(m, string_mul(number_operator(s), number_operator(s)))
            worst = max(worst, float(np.max(np.abs(square - dense[s]))))
        for r, s in itertools.combinations(range(1, m + 1), 2):
            comm = dense[r] @ dense[s] - dense[s] @ dense[r]
            worst = max(worst, float(np.max(np.abs(comm))))
        # a_s^2 = 0
        for s in range(1, m + 1):
            a = annihilator(s)
            worst = max(worst, float(np.max(np.abs(kron_string(m, string_mul(a, a))))))
        return self._result("number_operators", worst, tol, sites=m)

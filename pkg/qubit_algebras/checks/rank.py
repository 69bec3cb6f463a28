"""Span and cyclicity witnesses on finite truncations."""
from __future__ import annotations

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.core.car_fermions import cyclicity_rank
from qubit_algebras.core.operator_strings import full_algebra_rank


class RankCheck(BaseCheck):
    name = "rank"

    def default_params(self) -> dict:
        return {"sites": 3}

    def run(self, seed: int) -> list[CheckResult]:
        results = []
        for m in range(1, self.params["sites"] + 1):
            full = full_algebra_rank(m)
            results.append(
                self._result(
                    f"full_algebra_rank_m{m}",
                    abs(full - 4**m),
                    0.5,
                    rank=full,
                    expected=4**m,
                )
            )
            cyc = cyclicity_rank(m)
            results.append(
                self._result(
                    f"cyclicity_rank_m{m}",
                    abs(cyc - 2**m),
                    0.5,
                    rank=cyc,
                    expected=2**m,
                )
            )
        return results

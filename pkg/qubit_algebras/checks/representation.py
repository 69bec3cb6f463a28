"""Random instances of the bundle representation pi."""
from __future__ import annotations

import numpy as np

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.config import settings
from qubit_algebras.core.bundle_representation import star_rep_check
from qubit_algebras.core.groupoid import GroupElement, Point
from qubit_algebras.models.enums import Orientation
from qubit_algebras.oracle.sampling import random_conv_function, random_family


class RepresentationCheck(BaseCheck):
    name = "representation"

    def default_params(self) -> dict:
        return {
            "instances": 200,
            "sections_per_instance": 2,
            "sites": [1, 2, 3],
            "entries": 4,
            "orientation": Orientation.FORWARD.value,
        }

    def run(self, seed: int) -> list[CheckResult]:
        rng = np.random.default_rng(seed)
        sites = self.params["sites"]
        orientation = Orientation(self.params["orientation"])
        mult = adj = 0.0
        violations = 0
        failed = 0
        for i in range(self.params["instances"]):
            f = random_conv_function(rng, ["orbit"], sites, self.params["entries"])
            h = random_conv_function(rng, ["orbit"], sites, self.params["entries"])
            if f.is_zero():
                f = f + type(f).delta(Point("orbit"), GroupElement())
            family = random_family(rng, len(sites) + 1, overrides=1)
            report = star_rep_check(
                f,
                h,
                trials=self.params["sections_per_instance"],
                seed=seed + i,
                family=family,
                orientation=orientation,
            )
            mult = max(mult, report.multiplicative_residual)
            adj = max(adj, report.adjoint_residual)
            violations += report.norm_bound_violations
            failed += not report.passed

        tol = settings.REPRESENTATION_TOL
        n = self.params["instances"]
        return [
            self._result("multiplicative", mult, tol, instances=n, orientation=orientation.value),
            self._result("adjoint", adj, tol, instances=n),
            self._result("i_norm_dominates", float(violations), 0.5, instances=n),
            self._result("instances_failed", float(failed), 0.5, instances=n),
        ]

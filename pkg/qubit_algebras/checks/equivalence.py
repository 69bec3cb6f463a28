"""Equivalence criterion for reference families."""
from __future__ import annotations

import cmath
import math

import numpy as np

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.config import settings
from qubit_algebras.core.rep_equivalence import decide_equivalence
from qubit_algebras.core.site_algebra import E1, QubitVector
from qubit_algebras.core.theta_space import ThetaFamily
from qubit_algebras.models.enums import VerdictStatus
from qubit_algebras.oracle.sampling import random_family, random_qubit

PLUS = QubitVector(1 / math.sqrt(2), 1 / math.sqrt(2))


def example_families() -> list[tuple[str, ThetaFamily, ThetaFamily, VerdictStatus]]:
    rng = np.random.default_rng(0)
    overrides = {s: random_qubit(rng) for s in (1, 2, 3, 4, 5)}
    phase = cmath.exp(1j * math.pi / 3)
    return [
        (
            "finite_overrides",
            ThetaFamily.build(E1),
            ThetaFamily.build(E1, overrides),
            VerdictStatus.EQUIVALENT,
        ),
        ("rotated_tail", ThetaFamily.build(E1), ThetaFamily.build(PLUS), VerdictStatus.INEQUIVALENT),
        (
            "phase_tail",
            ThetaFamily.build(PLUS),
            ThetaFamily.build(PLUS.scaled(phase)),
            VerdictStatus.EQUIVALENT,
        ),
    ]


class EquivalenceCheck(BaseCheck):
    name = "equivalence"

    def default_params(self) -> dict:
        return {"families": 100, "sites": 8}

    def run(self, seed: int) -> list[CheckResult]:
        tol = settings.PROPERTY_TOL
        results = []
        for label, f, g, expected in example_families():
            verdict = decide_equivalence(f, g)
            results.append(
                self._result(
                    f"example_{label}",
                    0.0,
                    tol,
                    passed=verdict.status == expected,
                    verdict=verdict.status.value,
                    partial_sum=verdict.partial_sum,
                )
            )

        rng = np.random.default_rng(seed)
        sym = refl = gauge = 0.0
        sym_ok = refl_ok = gauge_ok = True
        for _ in range(self.params["families"]):
            f = random_family(rng, self.params["sites"], overrides=3)
            g = random_family(rng, self.params["sites"], overrides=3)
            fg, gf = decide_equivalence(f, g), decide_equivalence(g, f)
            sym = max(sym, abs(fg.partial_sum - gf.partial_sum))
            sym_ok &= fg.status == gf.status

            ff = decide_equivalence(f, f)
            refl = max(refl, ff.partial_sum)
            refl_ok &= ff.status == VerdictStatus.EQUIVALENT

            phase = cmath.exp(1j * float(rng.uniform(0, 2 * math.pi)))
            rotated = ThetaFamily(
                f.tail.scaled(phase), tuple((s, q.scaled(phase)) for s, q in f.overrides)
            )
            gauge_ok &= decide_equivalence(rotated, g).status == fg.status
            gauge = max(gauge, abs(decide_equivalence(rotated, f).partial_sum))

        results.append(self._result("symmetry", sym, tol, passed=sym_ok and sym < tol))
        results.append(self._result("reflexivity", refl, tol, passed=refl_ok and refl < tol))
        results.append(self._result("phase_gauge", gauge, tol, passed=gauge_ok and gauge < tol))
        return results

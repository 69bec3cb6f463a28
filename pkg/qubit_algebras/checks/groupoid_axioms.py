"""Groupoid structure maps, the pair-groupoid isomorphism and Haar invariance."""
from __future__ import annotations

import numpy as np

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.config import settings
from qubit_algebras.core.groupoid import (
    GroupoidElement,
    act,
    compose,
    domain_unit,
    from_pair,
    haar_invariance_check,
    inverse,
    pair_compose,
    range_unit,
    to_pair,
)
from qubit_algebras.oracle.sampling import (
    random_conv_function,
    random_group_element,
    random_groupoid_element,
)


class GroupoidAxiomsCheck(BaseCheck):
    name = "groupoid_axioms"

    def default_params(self) -> dict:
        return {"trials": 1000, "sites": [1, 2, 3, 4], "baselines": ["zeros", "ones"]}

    def run(self, seed: int) -> list[CheckResult]:
        rng = np.random.default_rng(seed)
        sites = self.params["sites"]
        baselines = self.params["baselines"]
        counts = dict.fromkeys(
            ("associativity", "inverse_laws", "pair_isomorphism", "free_action", "haar_invariance"),
            0,
        )
        haar_residual = 0.0

        for _ in range(self.params["trials"]):
            e = random_groupoid_element(rng, baselines, sites)
            x1 = act(e.point, e.group)
            e2 = GroupoidElement(x1, random_group_element(rng, sites))
            e3 = GroupoidElement(act(x1, e2.group), random_group_element(rng, sites))

            if compose(compose(e, e2), e3) != compose(e, compose(e2, e3)):
                counts["associativity"] += 1

            inv = inverse(e)
            if (
                compose(e, inv) != range_unit(e)
                or compose(inv, e) != domain_unit(e)
                or inverse(inv) != e
            ):
                counts["inverse_laws"] += 1

            if (
                from_pair(to_pair(e)) != e
                or to_pair(compose(e, e2)) != pair_compose(to_pair(e), to_pair(e2))
            ):
                counts["pair_isomorphism"] += 1

            if act(e.point, e.group) == e.point and not e.group.is_unit():
                counts["free_action"] += 1

            f = random_conv_function(rng, baselines, sites, entries=5)
            # start from a support point so the fibre sums are nonzero
            base = next(iter(f.keys()), e)
            witness = GroupoidElement(base.point, random_group_element(rng, sites))
            check = haar_invariance_check(f, witness)
            haar_residual = max(haar_residual, check.residual)
            if not check.passed:
                counts["haar_invariance"] += 1

        tol = settings.PROPERTY_TOL
        results = [
            self._result(name, float(failures), 0.5, trials=self.params["trials"])
            for name, failures in counts.items()
            if name != "haar_invariance"
        ]
        results.append(
            self._result(
                "haar_invariance",
                haar_residual,
                tol,
                passed=counts["haar_invariance"] == 0 and haar_residual < tol,
                trials=self.params["trials"],
            )
        )
        return results

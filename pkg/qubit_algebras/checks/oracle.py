"""Sparse string arithmetic against dense Kronecker matrices."""
from __future__ import annotations

import numpy as np

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.config import settings
from qubit_algebras.core.operator_strings import string_adjoint, string_mul
from qubit_algebras.core.theta_space import inner
from qubit_algebras.oracle.dense import compare_apply, dense_inner, embed_state, kron_string
from qubit_algebras.oracle.sampling import random_element, random_family, random_state


class OracleCheck(BaseCheck):
    name = "oracle"

    def default_params(self) -> dict:
        return {"trials": 500, "max_sites": settings.ORACLE_MAX_SITES}

    def run(self, seed: int) -> list[CheckResult]:
        rng = np.random.default_rng(seed)
        cap = self.params["max_sites"]
        apply_res = iso_res = mul_res = adj_res = 0.0
        for _ in range(self.params["trials"]):
            m = int(rng.integers(1, cap + 1))
            family = random_family(rng, m)
            a = random_element(rng, m)
            b = random_element(rng, m)
            u = random_state(rng, family, m)
            v = random_state(rng, family, m)

            apply_res = max(apply_res, compare_apply(m, a, u))
            iso_res = max(
                iso_res, abs(inner(u, v) - dense_inner(embed_state(m, u), embed_state(m, v)))
            )
            dense_a, dense_b = kron_string(m, a), kron_string(m, b)
            mul_res = max(
                mul_res, float(np.max(np.abs(kron_string(m, string_mul(a, b)) - dense_a @ dense_b)))
            )
            adj_res = max(
                adj_res, float(np.max(np.abs(kron_string(m, string_adjoint(a)) - dense_a.conj().T)))
            )

        trials = self.params["trials"]
        return [
            self._result("apply", apply_res, settings.ORACLE_TOL, trials=trials),
            self._result("embedding_isometric", iso_res, settings.PROPERTY_TOL, trials=trials),
            self._result("product_homomorphic", mul_res, settings.ORACLE_TOL, trials=trials),
            self._result("adjoint_homomorphic", adj_res, settings.ORACLE_TOL, trials=trials),
        ]

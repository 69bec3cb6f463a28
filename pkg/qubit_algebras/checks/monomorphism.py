"""The group algebra embeds injectively and *-homomorphically into the string algebra."""
from __future__ import annotations

import itertools

import numpy as np

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.checks.convolution_algebra import random_group_algebra
from qubit_algebras.config import settings
from qubit_algebras.core.convolution import (
    GroupAlgebraElement,
    embed,
    group_convolve,
    group_involution,
)
from qubit_algebras.core.groupoid import GroupElement
from qubit_algebras.core.operator_strings import string_adjoint, string_mul
from qubit_algebras.oracle.dense import dense_group_element, kron_string


def all_group_elements(m: int) -> list[GroupElement]:
    sites = range(1, m + 1)
    return [
        GroupElement(combo) for k in range(m + 1) for combo in itertools.combinations(sites, k)
    ]


class MonomorphismCheck(BaseCheck):
    name = "monomorphism"

    def default_params(self) -> dict:
        return {"sites": settings.ORACLE_MAX_SITES, "adjoint_trials": 50}

    def run(self, seed: int) -> list[CheckResult]:
        m = self.params["sites"]
        elements = all_group_elements(m)
        strings = {g: embed(GroupAlgebraElement.delta(g)) for g in elements}
        dense = {g: kron_string(m, strings[g]) for g in elements}

        # g-hat against the independent Kronecker sigma^1 pattern
        pattern = max(
            float(np.max(np.abs(dense[g] - dense_group_element(m, g.support)))) for g in elements
        )

        mult = 0.0
        for g1, g2 in itertools.product(elements, repeat=2):
            product = group_convolve(GroupAlgebraElement.delta(g1), GroupAlgebraElement.delta(g2))
            lhs = kron_string(m, embed(product))
            via_strings = kron_string(m, string_mul(strings[g1], strings[g2]))
            mult = max(
                mult,
                float(np.max(np.abs(lhs - dense[g1] @ dense[g2]))),
                float(np.max(np.abs(via_strings - dense[g1] @ dense[g2]))),
            )

        rng = np.random.default_rng(seed)
        adj = 0.0
        sites = list(range(1, m + 1))
        for _ in range(self.params["adjoint_trials"]):
            u = random_group_algebra(rng, sites, entries=4)
            lhs = kron_string(m, embed(group_involution(u)))
            adj = max(
                adj,
                float(np.max(np.abs(lhs - kron_string(m, embed(u)).conj().T))),
                float(np.max(np.abs(lhs - kron_string(m, string_adjoint(embed(u)))))),
            )

        rank = int(np.linalg.matrix_rank(np.array([dense[g].reshape(-1) for g in elements])))

        tol = settings.ORACLE_TOL
        return [
            self._result("group_string_pattern", pattern, tol, elements=len(elements)),
            self._result("multiplicative", mult, tol, pairs=len(elements) ** 2),
            self._result("adjoint_compatible", adj, tol, trials=self.params["adjoint_trials"]),
            self._result(
                "injective",
                abs(rank - len(elements)),
                0.5,
                rank=rank,
                expected=len(elements),
            ),
        ]

"""Convolution, involution and I-norm laws on random finitely-supported functions."""
from __future__ import annotations

import numpy as np

from qubit_algebras.checks.base_check import BaseCheck, CheckResult
from qubit_algebras.config import settings
from qubit_algebras.core.convolution import (
    ConvFunction,
    GroupAlgebraElement,
    convolve,
    group_convolve,
    group_norm,
    i_norm,
    involution,
)
from qubit_algebras.oracle.sampling import (
    random_complex,
    random_conv_function,
    random_group_element,
)


def max_abs(f: ConvFunction | GroupAlgebraElement) -> float:
    return max((abs(v) for v in f.entries.values()), default=0.0)


def random_group_algebra(rng: np.random.Generator, sites, entries: int = 3) -> GroupAlgebraElement:
    return GroupAlgebraElement.from_entries(
        (random_group_element(rng, sites), random_complex(rng)) for _ in range(entries)
    )


class ConvolutionCheck(BaseCheck):
    name = "convolution"

    def default_params(self) -> dict:
        return {"trials": 1000, "sites": [1, 2], "baselines": ["zeros"], "entries": 4}

    def run(self, seed: int) -> list[CheckResult]:
        rng = np.random.default_rng(seed)
        sites = self.params["sites"]
        baselines = self.params["baselines"]
        n = self.params["entries"]
        assoc = anti = submult = star_norm = 0.0
        group_comm = group_submult = 0.0

        for _ in range(self.params["trials"]):
            f = random_conv_function(rng, baselines, sites, n)
            g = random_conv_function(rng, baselines, sites, n)
            h = random_conv_function(rng, baselines, sites, n)
            fg = convolve(f, g)
            assoc = max(assoc, max_abs(convolve(fg, h) - convolve(f, convolve(g, h))))
            anti = max(anti, max_abs(involution(fg) - convolve(involution(g), involution(f))))
            submult = max(submult, i_norm(fg) - i_norm(f) * i_norm(g))
            star_norm = max(star_norm, abs(i_norm(involution(f)) - i_norm(f)))

            u = random_group_algebra(rng, sites + [sites[-1] + 1])
            v = random_group_algebra(rng, sites + [sites[-1] + 1])
            uv = group_convolve(u, v)
            group_comm = max(group_comm, max_abs(uv - group_convolve(v, u)))
            group_submult = max(group_submult, group_norm(uv) - group_norm(u) * group_norm(v))

        tol = settings.PROPERTY_TOL
        trials = self.params["trials"]
        return [
            self._result("associativity", assoc, tol, trials=trials),
            self._result("involution_antimultiplicative", anti, tol, trials=trials),
            # excess over the product bound; non-positive means the bound holds
            self._result("i_norm_submultiplicative", max(submult, 0.0), tol, trials=trials),
            self._result("i_norm_star_invariant", star_norm, tol, trials=trials),
            self._result("group_commutative", group_comm, tol, trials=trials),
            self._result("group_norm_submultiplicative", max(group_submult, 0.0), tol, trials=trials),
        ]

"""Jordan-Wigner realization of the CAR generators inside the string algebra."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from qubit_algebras.config import settings
from qubit_algebras.core.operator_strings import (
    AlgebraElement,
    apply,
    string_adjoint,
    string_mul,
)
from qubit_algebras.core.site_algebra import E1, E12, SIGMA_Z
from qubit_algebras.core.theta_space import SiteId, ThetaFamily, vacuum
from qubit_algebras.models.errors import TooLarge
from qubit_algebras.oracle.dense import embed_state, kron_string
from qubit_algebras.utils.logger import get_logger

logger = get_logger(__name__)

Generator = Callable[[SiteId], AlgebraElement]


def _check_index(s: SiteId) -> None:
    if s < 1:
        raise ValueError(f"fermion index must be >= 1, got {s}")


def annihilator(s: SiteId) -> AlgebraElement:
    """sigma^3 on sites 1..s-1 and (sigma^1 + i sigma^2)/2 = e12 at site s."""
    _check_index(s)
    factors = {r: SIGMA_Z for r in range(1, s)}
    factors[s] = E12
    return AlgebraElement.from_factors(factors)


def creator(s: SiteId) -> AlgebraElement:
    return string_adjoint(annihilator(s))


def annihilator_without_chain(s: SiteId) -> AlgebraElement:
    """Negative control: the sigma^3 chain is dropped."""
    _check_index(s)
    return AlgebraElement.from_factors({s: E12})


def number_operator(s: SiteId, generator: Generator = annihilator) -> AlgebraElement:
    a = generator(s)
    return string_mul(string_adjoint(a), a)


def anticommutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return string_mul(a, b) + string_mul(b, a)


@dataclass
class CarReport:
    passed: bool
    sites: int
    max_residual: float
    failures: List[str] = field(default_factory=list)


def car_relations_check(n: int, generator: Generator = annihilator) -> CarReport:
    """Check {a_r, a_s} = 0, {a_r+, a_s+} = 0 and {a_r, a_s+} = delta_rs on 1..n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > settings.CAR_MAX_SITES:
        raise TooLarge(f"n={n} exceeds {settings.CAR_MAX_SITES}")

    cap = settings.CAR_MAX_SITES
    dim = 2**n
    ann = {s: kron_string(n, generator(s), max_sites=cap) for s in range(1, n + 1)}
    cre = {s: a.conj().T for s, a in ann.items()}
    eye = np.eye(dim, dtype=complex)

    tol = settings.PROPERTY_TOL
    worst = 0.0
    failures: List[str] = []
    for r, s in itertools.product(range(1, n + 1), repeat=2):
        checks = (
            ("{a_%d, a_%d}" % (r, s), ann[r] @ ann[s] + ann[s] @ ann[r], 0.0),
            ("{a+_%d, a+_%d}" % (r, s), cre[r] @ cre[s] + cre[s] @ cre[r], 0.0),
            ("{a_%d, a+_%d}" % (r, s), ann[r] @ cre[s] + cre[s] @ ann[r], 1.0 if r == s else 0.0),
        )
        for name, value, delta in checks:
            residual = float(np.max(np.abs(value - delta * eye)))
            worst = max(worst, residual)
            if residual >= tol:
                failures.append(name)

    passed = not failures
    if passed:
        logger.info("car_check_passed", sites=n, max_residual=worst)
    else:
        logger.warning("car_check_failed", sites=n, max_residual=worst, failures=failures[:5])
    return CarReport(passed=passed, sites=n, max_residual=worst, failures=failures)


def cyclicity_rank(m: int, family: Optional[ThetaFamily] = None) -> int:
    """Rank of the normal-ordered monomials on sites 1..m applied to the vacuum."""
    if m < 1:
        raise ValueError("m must be positive")
    if m > settings.RANK_MAX_SITES:
        raise TooLarge(f"m={m} exceeds {settings.RANK_MAX_SITES}")
    family = family or ThetaFamily(tail=E1)
    sites = range(1, m + 1)
    subsets = [c for k in range(m + 1) for c in itertools.combinations(sites, k)]
    vac = vacuum(family)
    ann = {s: annihilator(s) for s in sites}
    cre = {s: creator(s) for s in sites}
    vectors = []
    for created in subsets:
        for destroyed in subsets:
            # the word a+_c1 ... a+_ck a_d1 ... a_dl acts right to left
            state = vac
            for s in reversed(destroyed):
                state = apply(ann[s], state)
            for s in reversed(created):
                state = apply(cre[s], state)
            vectors.append(embed_state(m, state))
    rank = int(np.linalg.matrix_rank(np.array(vectors)))
    logger.info("cyclicity_rank", sites=m, rank=rank, expected=2**m)
    return rank

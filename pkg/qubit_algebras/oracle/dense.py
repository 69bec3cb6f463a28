"""Dense Kronecker-product realizations on the first m sites.

Independent of the sparse code paths: only LocalOperator matrices, the
reference vectors of a family and plain complex coefficients are read.
"""
from __future__ import annotations

from functools import reduce
from typing import Iterable, Optional

import numpy as np

from qubit_algebras.config import settings
from qubit_algebras.core.operator_strings import AlgebraElement, apply
from qubit_algebras.core.theta_space import SiteId, SparseState
from qubit_algebras.models.errors import SiteOutOfRange, TooLarge

_I2 = np.eye(2, dtype=complex)
_X2 = np.array([[0, 1], [1, 0]], dtype=complex)


def _check_size(m: int, max_sites: Optional[int]) -> None:
    cap = settings.ORACLE_MAX_SITES if max_sites is None else max_sites
    if m < 1:
        raise ValueError("m must be positive")
    if m > cap:
        raise TooLarge(f"m={m} exceeds the dense cap {cap}")


def _check_sites(m: int, sites: Iterable[SiteId]) -> None:
    for s in sites:
        if s < 1 or s > m:
            raise SiteOutOfRange(f"site {s} outside 1..{m}")


def kron_all(factors: list[np.ndarray]) -> np.ndarray:
    return reduce(np.kron, factors)


def kron_string(m: int, a: AlgebraElement, max_sites: Optional[int] = None) -> np.ndarray:
    _check_size(m, max_sites)
    dim = 2**m
    out = np.zeros((dim, dim), dtype=complex)
    for string, coeff in a.items():
        _check_sites(m, string.sites)
        by_site = {s: op.matrix for s, op in string.factors}
        out += coeff * kron_all([by_site.get(s, _I2) for s in range(1, m + 1)])
    return out


def _perp(v: np.ndarray) -> np.ndarray:
    return np.array([-np.conj(v[1]), np.conj(v[0])])


def embed_state(m: int, u: SparseState, max_sites: Optional[int] = None) -> np.ndarray:
    _check_size(m, max_sites)
    frames = []
    for s in range(1, m + 1):
        theta = u.family.at(s).as_array()
        frames.append((theta, _perp(theta)))
    out = np.zeros(2**m, dtype=complex)
    for config, coeff in u.items():
        _check_sites(m, config.flips)
        flips = set(config.flips)
        out += coeff * kron_all([frames[s - 1][1 if s in flips else 0] for s in range(1, m + 1)])
    return out


def dense_group_element(m: int, support: Iterable[SiteId]) -> np.ndarray:
    """Kronecker pattern with sigma^1 on the support and identity elsewhere."""
    _check_size(m, None)
    support = set(support)
    _check_sites(m, support)
    return kron_all([_X2 if s in support else _I2 for s in range(1, m + 1)])


def dense_inner(u: np.ndarray, v: np.ndarray) -> complex:
    return complex(np.vdot(u, v))


def compare_apply(m: int, a: AlgebraElement, u: SparseState) -> float:
    """Max-norm residual between the dense product and the sparse action."""
    dense = kron_string(m, a) @ embed_state(m, u)
    sparse = embed_state(m, apply(a, u))
    return float(np.max(np.abs(dense - sparse), initial=0.0))

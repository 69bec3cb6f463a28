"""Finite linear combinations of operator strings and their natural action."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

import numpy as np

from qubit_algebras.config import settings
from qubit_algebras.core.site_algebra import (
    IDENTITY,
    PAULI,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    LocalOperator,
    mul2,
    pauli_components,
    scalar_part,
    site_norm_pauli,
)
from qubit_algebras.core.theta_space import (
    Configuration,
    SiteId,
    SparseState,
    ThetaFamily,
    truncation_configurations,
)
from qubit_algebras.models.enums import PauliLetter
from qubit_algebras.models.errors import NotElementary, TooLarge
from qubit_algebras.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class LocalString:
    """Elementary tensor with identity at every unlisted site.

    Strings held by an AlgebraElement only carry sx, sy or sz factors.
    """

    factors: Tuple[Tuple[SiteId, LocalOperator], ...] = ()

    @property
    def sites(self) -> Tuple[SiteId, ...]:
        return tuple(s for s, _ in self.factors)

    def factor(self, site: SiteId) -> LocalOperator:
        for s, op in self.factors:
            if s == site:
                return op
        return IDENTITY

    def sort_key(self) -> tuple:
        return tuple((s, op.key()) for s, op in self.factors)

    def __lt__(self, other: "LocalString") -> bool:
        return self.sort_key() < other.sort_key()


IDENTITY_STRING = LocalString()

_PAULI_FACTORS = (None, SIGMA_X, SIGMA_Y, SIGMA_Z)


def expand_factor(op: LocalOperator) -> list[Tuple[Optional[LocalOperator], complex]]:
    """Components of op on 1, sx, sy, sz; None stands for the identity."""
    scalar = scalar_part(op)
    if scalar is not None:
        return [(None, scalar)]
    threshold = settings.CANONICAL_THRESHOLD
    return [
        (pauli, c)
        for pauli, c in zip(_PAULI_FACTORS, pauli_components(op))
        if abs(c) >= threshold
    ]


def expand_string(factors: Mapping[SiteId, LocalOperator]) -> list[Tuple[LocalString, complex]]:
    """Expand an elementary tensor into Pauli strings.

    Every scalar ends up in the coefficient, so two strings are equal exactly
    when they carry the same Pauli letter at every site.
    """
    per_site = [
        [(site, pauli, c) for pauli, c in expand_factor(factors[site])] for site in sorted(factors)
    ]
    terms = []
    for choice in itertools.product(*per_site):
        coeff = 1 + 0j
        kept = []
        for site, pauli, c in choice:
            coeff *= c
            if pauli is not None:
                kept.append((site, pauli))
        terms.append((LocalString(tuple(kept)), coeff))
    return terms


def _merge(terms: Iterable[Tuple[LocalString, complex]]) -> Dict[LocalString, complex]:
    merged: Dict[LocalString, complex] = {}
    for string, coeff in terms:
        merged[string] = merged.get(string, 0j) + complex(coeff)
    threshold = settings.CANONICAL_THRESHOLD
    return {
        s: merged[s]
        for s in sorted(merged, key=LocalString.sort_key)
        if abs(merged[s]) >= threshold
    }


@dataclass(frozen=True)
class AlgebraElement:
    terms: Mapping[LocalString, complex] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[LocalString, complex]]) -> "AlgebraElement":
        return cls(_merge(terms))

    @classmethod
    def from_factors(
        cls, factors: Mapping[SiteId, LocalOperator], coeff: complex = 1.0
    ) -> "AlgebraElement":
        return cls.from_terms((s, coeff * c) for s, c in expand_string(factors))

    def items(self) -> Iterator[Tuple[LocalString, complex]]:
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def sites(self) -> set[SiteId]:
        return {s for string in self.terms for s in string.sites}

    def coefficient(self, string: LocalString) -> complex:
        return self.terms.get(string, 0j)

    def max_abs_coefficient(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement.from_terms(itertools.chain(self.items(), other.items()))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1) * other

    def __mul__(self, scalar: complex) -> "AlgebraElement":
        return AlgebraElement.from_terms((s, complex(scalar) * c) for s, c in self.items())

    __rmul__ = __mul__

    def __neg__(self) -> "AlgebraElement":
        return (-1) * self

    def __matmul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return string_mul(self, other)


def identity() -> AlgebraElement:
    return AlgebraElement({IDENTITY_STRING: 1 + 0j})


def zero() -> AlgebraElement:
    return AlgebraElement({})


def site_operator(site: SiteId, op: LocalOperator, coeff: complex = 1.0) -> AlgebraElement:
    return AlgebraElement.from_factors({site: op}, coeff)


def pauli_string(letters: Mapping[SiteId, str | PauliLetter], coeff: complex = 1.0) -> AlgebraElement:
    return AlgebraElement.from_factors(
        {site: PAULI[PauliLetter(letter)] for site, letter in letters.items()}, coeff
    )


def _pauli_products() -> Dict[tuple, Tuple[Optional[LocalOperator], complex]]:
    table = {}
    for a, b in itertools.product(_PAULI_FACTORS[1:], repeat=2):
        ((pauli, phase),) = expand_factor(mul2(a, b))
        table[a.entries, b.entries] = (pauli, phase)
    return table


# sx, sy, sz pairs -> (letter or None for the identity, phase)
_PAULI_PRODUCT = _pauli_products()


def _string_product(a: LocalString, b: LocalString) -> Tuple[LocalString, complex]:
    """Sitewise product of two canonical strings."""
    phase = 1 + 0j
    factors = dict(a.factors)
    for site, op in b.factors:
        if site not in factors:
            factors[site] = op
            continue
        pauli, c = _PAULI_PRODUCT[factors[site].entries, op.entries]
        phase *= c
        if pauli is None:
            del factors[site]
        else:
            factors[site] = pauli
    return LocalString(tuple(sorted(factors.items(), key=lambda f: f[0]))), phase


def string_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    terms = []
    for (sa, ca), (sb, cb) in itertools.product(a.items(), b.items()):
        string, phase = _string_product(sa, sb)
        terms.append((string, ca * cb * phase))
    return AlgebraElement.from_terms(terms)


def string_adjoint(a: AlgebraElement) -> AlgebraElement:
    # canonical factors are self-adjoint
    return AlgebraElement.from_terms((string, coeff.conjugate()) for string, coeff in a.items())


def tensor_norm_pauli(s: LocalString | AlgebraElement) -> float:
    """Product of per-site norms of an elementary tensor.

    A LocalString may carry arbitrary factors. An AlgebraElement must be a
    single Pauli string, whose norm is the modulus of its coefficient.
    """
    coeff = 1 + 0j
    if isinstance(s, AlgebraElement):
        if len(s.terms) != 1:
            raise NotElementary(f"expected a single elementary string, got {len(s.terms)} terms")
        s, coeff = next(s.items())
    return abs(coeff) * reduce(lambda acc, f: acc * site_norm_pauli(f[1]), s.factors, 1.0)


def _frame_matrix(family: ThetaFamily, site: SiteId, op: LocalOperator) -> np.ndarray:
    """Matrix of op in the local frame (theta_s, theta_s^perp)."""
    frame = family.frame(site).matrix()
    return frame.conj().T @ op.matrix @ frame


def apply(a: AlgebraElement, u: SparseState) -> SparseState:
    """Natural representation of the string algebra on the theta-space."""
    family = u.family
    out: list[Tuple[Configuration, complex]] = []
    for string, coeff in a.items():
        local = [(site, _frame_matrix(family, site, op)) for site, op in string.factors]
        for config, amp in u.items():
            partial = [(config, coeff * amp)]
            for site, m in local:
                col = 1 if site in config else 0
                nxt = []
                for cfg, c in partial:
                    for row in (0, 1):
                        entry = m[row, col]
                        if entry != 0:
                            nxt.append((cfg.with_site(site, bool(row)), c * complex(entry)))
                partial = nxt
            out.extend(partial)
    return SparseState.from_terms(family, out)


def truncation_matrix(a: AlgebraElement, m: int, family: Optional[ThetaFamily] = None) -> np.ndarray:
    """Matrix of apply(a, .) on the 2^m configurations inside {1..m}."""
    family = family or ThetaFamily()
    configs = truncation_configurations(m)
    index = {c: i for i, c in enumerate(configs)}
    mat = np.zeros((len(configs), len(configs)), dtype=complex)
    for j, config in enumerate(configs):
        image = apply(a, SparseState(family, {config: 1 + 0j}))
        for cfg, coeff in image.items():
            mat[index[cfg], j] = coeff
    return mat


def truncation_operator_norm(a: AlgebraElement, m: int, family: Optional[ThetaFamily] = None) -> float:
    """Operator norm of a on the truncation; the only norm offered for combinations."""
    return float(np.linalg.norm(truncation_matrix(a, m, family), ord=2))


def pauli_basis(m: int) -> list[AlgebraElement]:
    letters = [PauliLetter.I, PauliLetter.X, PauliLetter.Y, PauliLetter.Z]
    return [
        pauli_string(dict(zip(range(1, m + 1), word)))
        for word in itertools.product(letters, repeat=m)
    ]


def full_algebra_rank(m: int, family: Optional[ThetaFamily] = None) -> int:
    """Dimension of the span of the 4^m Pauli strings on the 2^m truncation."""
    if m < 1:
        raise ValueError("m must be positive")
    if m > settings.RANK_MAX_SITES:
        raise TooLarge(f"m={m} exceeds {settings.RANK_MAX_SITES}")
    rows = np.array([truncation_matrix(p, m, family).reshape(-1) for p in pauli_basis(m)])
    rank = int(np.linalg.matrix_rank(rows))
    logger.info("full_algebra_rank", sites=m, rank=rank, expected=4**m)
    return rank

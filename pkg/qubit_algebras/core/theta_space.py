"""Sparse theta-tensor-product pre-Hilbert space.

A state is a finite linear combination of configurations. A configuration is
the finite set of sites where the local vector is theta_s^perp instead of
theta_s; with the per-site frames (theta_s, theta_s^perp) these configurations
form an orthonormal basis, so the product inner product reduces to pairing
equal flip sets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

import numpy as np

from qubit_algebras.config import settings
from qubit_algebras.core.site_algebra import E1, QubitVector
from qubit_algebras.models.errors import FamilyMismatch, NotNormalized

SiteId = int


def theta_perp(v: QubitVector) -> QubitVector:
    """Orthogonal complement by the convention (a, b) -> (-conj(b), conj(a))."""
    if abs(v.norm() - 1.0) > settings.NORMALIZATION_INPUT_TOL:
        raise NotNormalized(f"vector {v} has norm {v.norm()}")
    return QubitVector(-v.c2.conjugate(), v.c1.conjugate())


@dataclass(frozen=True)
class OrthoFrame:
    theta: QubitVector
    theta_perp: QubitVector

    @classmethod
    def of(cls, theta: QubitVector) -> "OrthoFrame":
        return cls(theta, theta_perp(theta))

    def matrix(self) -> np.ndarray:
        """Columns theta, theta_perp in the standard basis."""
        return np.column_stack([self.theta.as_array(), self.theta_perp.as_array()])


def _require_normalized(v: QubitVector) -> None:
    if abs(v.norm() - 1.0) > settings.NORMALIZATION_TOL:
        raise NotNormalized(f"reference vector {v} has norm {v.norm()}")


@dataclass(frozen=True, eq=False)
class ThetaFamily:
    """Finite overrides on top of a constant tail.

    Overrides within NORMALIZATION_TOL of the tail are dropped, and families
    compare by vectors rounded to STRING_KEY_DECIMALS.
    """

    tail: QubitVector = E1
    overrides: Tuple[Tuple[SiteId, QubitVector], ...] = ()

    def __post_init__(self) -> None:
        _require_normalized(self.tail)
        merged = dict(self.overrides)
        for site, vector in merged.items():
            if site < 0:
                raise ValueError(f"site index must be non-negative, got {site}")
            _require_normalized(vector)
        kept = {
            site: vector
            for site, vector in merged.items()
            if not vector.close_to(self.tail, settings.NORMALIZATION_TOL)
        }
        object.__setattr__(self, "overrides", tuple(sorted(kept.items())))

    def key(self) -> tuple:
        return self.tail.key(), tuple((s, v.key()) for s, v in self.overrides)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThetaFamily):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    @classmethod
    def build(
        cls, tail: QubitVector = E1, overrides: Optional[Mapping[SiteId, QubitVector]] = None
    ) -> "ThetaFamily":
        return cls(tail, tuple((overrides or {}).items()))

    @property
    def override_map(self) -> Dict[SiteId, QubitVector]:
        return dict(self.overrides)

    def at(self, site: SiteId) -> QubitVector:
        for s, vector in self.overrides:
            if s == site:
                return vector
        return self.tail

    def frame(self, site: SiteId) -> OrthoFrame:
        return OrthoFrame.of(self.at(site))


@dataclass(frozen=True, order=True)
class Configuration:
    flips: Tuple[SiteId, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "flips", tuple(sorted(set(self.flips))))

    @classmethod
    def of(cls, *sites: SiteId) -> "Configuration":
        return cls(tuple(sites))

    def __contains__(self, site: SiteId) -> bool:
        return site in self.flips

    def toggled(self, site: SiteId) -> "Configuration":
        return Configuration(tuple(set(self.flips) ^ {site}))

    def with_site(self, site: SiteId, flipped: bool) -> "Configuration":
        flips = set(self.flips)
        if flipped:
            flips.add(site)
        else:
            flips.discard(site)
        return Configuration(tuple(flips))


VACUUM_CONFIGURATION = Configuration()


def _merge_terms(terms: Iterable[Tuple[Configuration, complex]]) -> Dict[Configuration, complex]:
    merged: Dict[Configuration, complex] = {}
    for config, coeff in terms:
        merged[config] = merged.get(config, 0j) + complex(coeff)
    threshold = settings.CANONICAL_THRESHOLD
    return {c: merged[c] for c in sorted(merged) if abs(merged[c]) >= threshold}


@dataclass(frozen=True)
class SparseState:
    family: ThetaFamily
    terms: Mapping[Configuration, complex] = field(default_factory=dict)

    @classmethod
    def from_terms(
        cls, family: ThetaFamily, terms: Iterable[Tuple[Configuration, complex]]
    ) -> "SparseState":
        """Merge a raw linear combination into normal form."""
        return cls(family, _merge_terms(terms))

    def coefficient(self, config: Configuration) -> complex:
        return self.terms.get(config, 0j)

    def items(self) -> Iterator[Tuple[Configuration, complex]]:
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def sites(self) -> set[SiteId]:
        return {s for config in self.terms for s in config.flips}

    def _check_family(self, other: "SparseState") -> None:
        if self.family != other.family:
            raise FamilyMismatch("states are built on different reference families")

    def __add__(self, other: "SparseState") -> "SparseState":
        self._check_family(other)
        return SparseState.from_terms(
            self.family, itertools.chain(self.terms.items(), other.terms.items())
        )

    def __sub__(self, other: "SparseState") -> "SparseState":
        return self + (-1) * other

    def __mul__(self, scalar: complex) -> "SparseState":
        return SparseState.from_terms(
            self.family, ((c, complex(scalar) * v) for c, v in self.terms.items())
        )

    __rmul__ = __mul__

    def __neg__(self) -> "SparseState":
        return (-1) * self


def vacuum(family: ThetaFamily) -> SparseState:
    return SparseState(family, {VACUUM_CONFIGURATION: 1 + 0j})


def basis_state(
    family: ThetaFamily, flips: Iterable[SiteId] = (), coeff: complex = 1.0
) -> SparseState:
    return SparseState.from_terms(family, [(Configuration(tuple(flips)), coeff)])


def zero_state(family: ThetaFamily) -> SparseState:
    return SparseState(family, {})


def canonicalize(u: SparseState) -> SparseState:
    """Merge, prune coefficients below the threshold and sort keys."""
    return SparseState.from_terms(u.family, u.terms.items())


def inner(u: SparseState, v: SparseState) -> complex:
    """Product inner product, conjugate-linear in u."""
    if u.family != v.family:
        raise FamilyMismatch("inner product of states on different reference families")
    small, large = (u, v) if len(u.terms) <= len(v.terms) else (v, u)
    total = 0j
    for config in small.terms:
        if config in large.terms:
            total += u.terms[config].conjugate() * v.terms[config]
    return total


def norm(u: SparseState) -> float:
    return float(np.sqrt(max(inner(u, u).real, 0.0)))


def truncation_configurations(m: int, first_site: SiteId = 1) -> list[Configuration]:
    """All 2^m flip sets inside {first_site .. first_site + m - 1}.

    Ordered so that the index bits read site first_site as the most
    significant bit, matching the Kronecker ordering of the dense oracle.
    """
    sites = range(first_site, first_site + m)
    configs = []
    for bits in itertools.product((0, 1), repeat=m):
        configs.append(Configuration(tuple(s for s, b in zip(sites, bits) if b)))
    return configs

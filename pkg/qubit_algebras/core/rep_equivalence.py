"""Equivalence of the representations built on two reference families."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from qubit_algebras.config import settings
from qubit_algebras.core.site_algebra import QubitVector
from qubit_algebras.core.theta_space import SiteId, ThetaFamily
from qubit_algebras.models.enums import VerdictStatus
from qubit_algebras.models.errors import NotNormalized
from qubit_algebras.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ParametricFamily:
    """Reference family given by a rule; no exact verdict is attempted."""

    rule: Callable[[SiteId], QubitVector]
    name: str = "parametric"

    def at(self, site: SiteId) -> QubitVector:
        return self.rule(site)


def rotation_family(angle: float, decay: float = 0.0) -> ParametricFamily:
    """Real rotations by angle * s**-decay away from e1."""

    def rule(site: SiteId) -> QubitVector:
        t = angle * float(site) ** -decay
        return QubitVector(math.cos(t), math.sin(t))

    return ParametricFamily(rule, name=f"rotation(angle={angle}, decay={decay})")


@dataclass(frozen=True)
class EquivalenceVerdict:
    status: VerdictStatus
    partial_sum: float
    terms_evaluated: int
    tail_term: Optional[float] = None


def overlap_term(u: QubitVector, v: QubitVector) -> float:
    """| |<u|v>| - 1 |"""
    tol = settings.NORMALIZATION_INPUT_TOL
    for w in (u, v):
        if abs(w.norm() - 1.0) > tol:
            raise NotNormalized(f"vector {w} has norm {w.norm()}")
    return abs(abs(u.dot(v)) - 1.0)


def _partial(f, g, partial_terms: int) -> EquivalenceVerdict:
    total = sum(overlap_term(f.at(s), g.at(s)) for s in range(1, partial_terms + 1))
    logger.info("equivalence_inconclusive", partial_sum=total, terms=partial_terms)
    return EquivalenceVerdict(VerdictStatus.INCONCLUSIVE, total, partial_terms)


def decide_equivalence(
    f: ThetaFamily | ParametricFamily,
    g: ThetaFamily | ParametricFamily,
    partial_terms: Optional[int] = None,
) -> EquivalenceVerdict:
    """Decide whether sum_s | |<f_s|g_s>| - 1 | converges.

    For finite overrides on a constant tail the series is the finite override
    contribution plus infinitely many copies of the tail term, so it converges
    exactly when the tail term vanishes.
    """
    if not isinstance(f, ThetaFamily) or not isinstance(g, ThetaFamily):
        return _partial(f, g, partial_terms or settings.DEFAULT_PARTIAL_TERMS)

    sites = sorted(set(f.override_map) | set(g.override_map))
    partial = sum(overlap_term(f.at(s), g.at(s)) for s in sites)
    tail = overlap_term(f.tail, g.tail)
    if tail <= settings.TAIL_ZERO_TOL:
        status = VerdictStatus.EQUIVALENT
    else:
        status = VerdictStatus.INEQUIVALENT
    logger.info(
        "equivalence_decided",
        status=status.value,
        partial_sum=partial,
        tail_term=tail,
        overrides=len(sites),
    )
    return EquivalenceVerdict(status, partial, len(sites), tail_term=tail)

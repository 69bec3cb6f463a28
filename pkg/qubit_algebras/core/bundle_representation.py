"""Sections of the bundle X x Q and the representation pi of the convolution algebra."""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from qubit_algebras.config import settings
from qubit_algebras.core.convolution import (
    ConvFunction,
    Convolution,
    convolve,
    group_string,
    i_norm,
    involution,
)
from qubit_algebras.core.groupoid import GroupoidElement, Point, act, compose
from qubit_algebras.core.operator_strings import apply
from qubit_algebras.core.theta_space import (
    Configuration,
    SiteId,
    SparseState,
    ThetaFamily,
    inner,
    vacuum,
)
from qubit_algebras.models.enums import Orientation
from qubit_algebras.models.errors import BasisNotClosed, FamilyMismatch
from qubit_algebras.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Section:
    family: ThetaFamily
    values: Mapping[Point, SparseState] = field(default_factory=dict)

    @classmethod
    def from_values(
        cls, family: ThetaFamily, values: Iterable[Tuple[Point, SparseState]]
    ) -> "Section":
        """Sum states landing on the same point and drop zero states."""
        acc: Dict[Point, SparseState] = {}
        for point, state in values:
            if state.family != family:
                raise FamilyMismatch(f"state at {point} uses a different family")
            acc[point] = acc[point] + state if point in acc else state
        return cls(family, {p: acc[p] for p in sorted(acc) if not acc[p].is_zero()})

    def at(self, point: Point) -> Optional[SparseState]:
        return self.values.get(point)

    def items(self) -> Iterator[Tuple[Point, SparseState]]:
        return iter(self.values.items())

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "Section") -> "Section":
        return Section.from_values(self.family, itertools.chain(self.items(), other.items()))

    def __sub__(self, other: "Section") -> "Section":
        return self + (-1) * other

    def __mul__(self, scalar: complex) -> "Section":
        return Section.from_values(self.family, ((p, scalar * s) for p, s in self.items()))

    __rmul__ = __mul__


def vacuum_section(family: ThetaFamily, points: Iterable[Point]) -> Section:
    return Section.from_values(family, ((p, vacuum(family)) for p in points))


def groupoid_act(e: GroupoidElement, v: SparseState) -> SparseState:
    """Fibre isomorphism of (x, g): the sigma^1 string of g."""
    return apply(group_string(e.group), v)


def l2_inner(phi: Section, psi: Section) -> complex:
    if phi.family != psi.family:
        raise FamilyMismatch("sections on different reference families")
    return sum(
        (inner(state, psi.values[p]) for p, state in phi.items() if p in psi.values), 0j
    )


def section_norm(phi: Section) -> float:
    return float(np.sqrt(max(l2_inner(phi, phi).real, 0.0)))


def pi_apply(
    f: ConvFunction, phi: Section, orientation: Orientation = Orientation.FORWARD
) -> Section:
    """Represented action of f on a section.

    FORWARD: (pi(f)phi)(x) = sum_g f((xg^{-1}, g)) g-hat phi(xg^{-1}); an entry at
    (y, g) carries phi(y) to the point y*g. This reverses products:
    pi(f*h) = pi(h)pi(f).
    RANGE: (pi(f)phi)(x) = sum_g f((x, g)) g-hat phi(xg); an entry at (y, g)
    carries phi(y*g) to y, and pi(f*h) = pi(f)pi(h).
    """
    out: List[Tuple[Point, SparseState]] = []
    for e, value in f.items():
        target = act(e.point, e.group)
        src, dst = (e.point, target) if orientation == Orientation.FORWARD else (target, e.point)
        state = phi.at(src)
        if state is None:
            continue
        out.append((dst, value * groupoid_act(e, state)))
    return Section.from_values(phi.family, out)


def _compose_pi(
    f: ConvFunction, h: ConvFunction, phi: Section, orientation: Orientation
) -> Section:
    if orientation == Orientation.FORWARD:
        return pi_apply(h, pi_apply(f, phi, orientation), orientation)
    return pi_apply(f, pi_apply(h, phi, orientation), orientation)


@dataclass
class RepCheckReport:
    passed: bool
    trials: int
    multiplicative_residual: float
    adjoint_residual: float
    norm_bound_violations: int = 0

    @property
    def max_residual(self) -> float:
        return max(self.multiplicative_residual, self.adjoint_residual)


def star_rep_check(
    f: ConvFunction,
    h: ConvFunction,
    trials: int,
    seed: int,
    family: Optional[ThetaFamily] = None,
    orientation: Orientation = Orientation.FORWARD,
    convolution: Convolution = convolve,
) -> RepCheckReport:
    """Check multiplicativity, the adjoint law and the I-norm bound on random sections."""
    # deferred: the sampling module builds Section values from this one
    from qubit_algebras.oracle.sampling import random_section

    family = family or ThetaFamily()
    rng = np.random.default_rng(seed)
    points = sorted(f.support_points() | h.support_points())
    sites = sorted(
        {s for e in itertools.chain(f.keys(), h.keys()) for s in e.group.support} | {1}
    )
    fh = convolution(f, h)
    f_star = involution(f)
    bound = i_norm(f)
    tol = settings.REPRESENTATION_TOL

    mult = 0.0
    adj = 0.0
    violations = 0
    for _ in range(trials):
        phi = random_section(rng, family, points, sites)
        psi = random_section(rng, family, points, sites)
        diff = pi_apply(fh, phi, orientation) - _compose_pi(f, h, phi, orientation)
        mult = max(mult, section_norm(diff))
        lhs = l2_inner(pi_apply(f_star, phi, orientation), psi)
        rhs = l2_inner(phi, pi_apply(f, psi, orientation))
        adj = max(adj, abs(lhs - rhs))
        if section_norm(pi_apply(f, phi, orientation)) > bound * section_norm(phi) + tol:
            violations += 1

    passed = mult < tol and adj < tol and violations == 0
    logger.info(
        "star_rep_check",
        passed=passed,
        trials=trials,
        multiplicative_residual=mult,
        adjoint_residual=adj,
        norm_bound_violations=violations,
        orientation=orientation.value,
    )
    return RepCheckReport(passed, trials, mult, adj, violations)


BasisVector = Tuple[Point, Configuration]


def closed_basis(
    f: ConvFunction, points: Iterable[Point], sites: Iterable[SiteId]
) -> List[BasisVector]:
    """Basis closed under the support of f.

    Points are closed under the group elements of f; configurations are all
    flip sets inside the given sites together with the sites those group
    elements touch.
    """
    groups = {e.group for e in f.keys()}
    all_sites = sorted(set(sites) | {s for g in groups for s in g.support})
    closed = set(points)
    frontier = list(closed)
    while frontier:
        p = frontier.pop()
        for g in groups:
            q = act(p, g)
            if q not in closed:
                closed.add(q)
                frontier.append(q)
    configs = [
        Configuration(combo)
        for k in range(len(all_sites) + 1)
        for combo in itertools.combinations(all_sites, k)
    ]
    return [(p, c) for p in sorted(closed) for c in sorted(configs)]


def matrix_on_truncation(
    f: ConvFunction,
    basis: Sequence[BasisVector],
    family: Optional[ThetaFamily] = None,
    orientation: Orientation = Orientation.FORWARD,
    workers: Optional[int] = None,
) -> np.ndarray:
    """Entries <basis_i | pi(f) basis_j>; columns are evaluated on a thread pool."""
    family = family or ThetaFamily()
    index = {b: i for i, b in enumerate(basis)}

    def column(j: int) -> np.ndarray:
        point, config = basis[j]
        phi = Section(family, {point: SparseState(family, {config: 1 + 0j})})
        col = np.zeros(len(basis), dtype=complex)
        for p, state in pi_apply(f, phi, orientation).items():
            for cfg, coeff in state.items():
                i = index.get((p, cfg))
                if i is None:
                    logger.warning("truncation_basis_not_closed", point=str(p), flips=cfg.flips)
                    raise BasisNotClosed(f"pi(f) maps basis vector {j} outside the span")
                col[i] = coeff
        return col

    with ThreadPoolExecutor(max_workers=workers or settings.TRUNCATION_WORKERS) as pool:
        columns = list(pool.map(column, range(len(basis))))
    if not columns:
        return np.zeros((0, 0), dtype=complex)
    return np.column_stack(columns)


def truncation_norm_bound(f: ConvFunction, basis: Sequence[BasisVector], **kwargs) -> float:
    """Largest singular value on the truncation; a lower bound for the represented norm."""
    mat = matrix_on_truncation(f, basis, **kwargs)
    if mat.size == 0:
        return 0.0
    return float(np.linalg.norm(mat, ord=2))


def act_by_compose_residual(e: GroupoidElement, e2: GroupoidElement, v: SparseState) -> float:
    """Acting by e*e2 versus acting by e2 then e, in the max coefficient norm."""
    diff = groupoid_act(compose(e, e2), v) - groupoid_act(e, groupoid_act(e2, v))
    return max((abs(c) for _, c in diff.items()), default=0.0)

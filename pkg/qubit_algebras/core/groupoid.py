"""Action groupoid of finitely-supported Z2 flips, its pair form and Haar system.

X = Z2^S is uncountable, so a point is a named baseline pattern plus a
finite set of flipped sites. Points with the same baseline form one G-orbit.
The group G acts by symmetric difference, every element is an involution,
and the Haar measure on G is counting measure.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Tuple

from qubit_algebras.config import settings
from qubit_algebras.core.theta_space import SiteId
from qubit_algebras.models.errors import NotComposable, NotEquivalent

if TYPE_CHECKING:
    from qubit_algebras.core.convolution import ConvFunction


def _sorted_sites(sites: Iterable[SiteId]) -> Tuple[SiteId, ...]:
    return tuple(sorted(set(sites)))


@dataclass(frozen=True, order=True)
class GroupElement:
    support: Tuple[SiteId, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "support", _sorted_sites(self.support))

    @classmethod
    def of(cls, *sites: SiteId) -> "GroupElement":
        return cls(tuple(sites))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(set(self.support) ^ set(other.support)))

    def inverse(self) -> "GroupElement":
        return self

    def is_unit(self) -> bool:
        return not self.support


UNIT = GroupElement()


@dataclass(frozen=True, order=True)
class Point:
    baseline: str
    flips: Tuple[SiteId, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "flips", _sorted_sites(self.flips))


@dataclass(frozen=True, order=True)
class GroupoidElement:
    point: Point
    group: GroupElement = UNIT


@dataclass(frozen=True, order=True)
class PairElement:
    src: Point
    dst: Point


def act(x: Point, g: GroupElement) -> Point:
    return Point(x.baseline, tuple(set(x.flips) ^ set(g.support)))


def flip_difference(x: Point, y: Point) -> GroupElement:
    if x.baseline != y.baseline:
        raise NotEquivalent(f"points on baselines {x.baseline!r} and {y.baseline!r} are not equivalent")
    return GroupElement(tuple(set(x.flips) ^ set(y.flips)))


def composable(e: GroupoidElement, e2: GroupoidElement) -> bool:
    return e2.point == act(e.point, e.group)


def compose(e: GroupoidElement, e2: GroupoidElement) -> GroupoidElement:
    """(x, g)(xg, g') = (x, gg')."""
    if not composable(e, e2):
        raise NotComposable(f"{e2.point} is not the target {act(e.point, e.group)}")
    return GroupoidElement(e.point, e.group * e2.group)


def inverse(e: GroupoidElement) -> GroupoidElement:
    return GroupoidElement(act(e.point, e.group), e.group.inverse())


def range_unit(e: GroupoidElement) -> GroupoidElement:
    return GroupoidElement(e.point, UNIT)


def domain_unit(e: GroupoidElement) -> GroupoidElement:
    return GroupoidElement(act(e.point, e.group), UNIT)


def unit(x: Point) -> GroupoidElement:
    return GroupoidElement(x, UNIT)


# Pair groupoid of the orbit equivalence relation.


def to_pair(e: GroupoidElement) -> PairElement:
    return PairElement(e.point, act(e.point, e.group))


def from_pair(p: PairElement) -> GroupoidElement:
    return GroupoidElement(p.src, flip_difference(p.src, p.dst))


def pair_compose(p: PairElement, q: PairElement) -> PairElement:
    if p.dst != q.src:
        raise NotComposable(f"{q.src} is not the target {p.dst}")
    return PairElement(p.src, q.dst)


def pair_inverse(p: PairElement) -> PairElement:
    return PairElement(p.dst, p.src)


def pair_range(p: PairElement) -> PairElement:
    return PairElement(p.src, p.src)


def pair_domain(p: PairElement) -> PairElement:
    return PairElement(p.dst, p.dst)


def is_principal(elements: Iterable[GroupoidElement]) -> bool:
    """(range, domain) is injective on the given elements."""
    seen: dict[tuple[Point, Point], GroupoidElement] = {}
    for e in elements:
        key = (e.point, act(e.point, e.group))
        if seen.setdefault(key, e) != e:
            return False
    return True


def orbit_points(x: Point, sites: Iterable[SiteId]) -> list[Point]:
    """All points reachable from x by flips inside sites."""
    sites = _sorted_sites(sites)
    return sorted(
        act(x, GroupElement(combo))
        for k in range(len(sites) + 1)
        for combo in itertools.combinations(sites, k)
    )


# Haar system mu_x = eps_x x counting measure.


def haar_integrate(f: "ConvFunction", x: Point) -> complex:
    return sum((v for e, v in f.items() if e.point == x), 0j)


@dataclass(frozen=True)
class HaarCheck:
    passed: bool
    residual: float


def haar_invariance_check(f: "ConvFunction", e: GroupoidElement) -> HaarCheck:
    """Compare int f((x,g)(y,g')) dmu_{xg} with int f((y,g')) dmu_x."""
    x, g = e.point, e.group
    target = act(x, g)
    # f((x,g)(xg,g')) is nonzero only when g*g' is in the support over x
    candidates = {g * h.group for h in f.keys() if h.point == x}
    lhs = sum(
        (f.get(compose(e, GroupoidElement(target, gp))) for gp in candidates), 0j
    )
    rhs = haar_integrate(f, x)
    residual = abs(lhs - rhs)
    return HaarCheck(residual < settings.PROPERTY_TOL, residual)

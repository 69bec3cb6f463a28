"""Convolution algebra of finitely-supported functions on the action groupoid.

Also the group algebra A_G of finitely-supported functions on G and its
monomorphism into the string algebra via g -> sigma^1 on the support of g.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple

from qubit_algebras.config import settings
from qubit_algebras.core.groupoid import (
    UNIT,
    GroupElement,
    GroupoidElement,
    Point,
    act,
    inverse,
)
from qubit_algebras.core.operator_strings import AlgebraElement
from qubit_algebras.core.site_algebra import SIGMA_X


def _canonical(entries: Iterable[Tuple[object, complex]]) -> dict:
    merged: dict = {}
    for key, value in entries:
        merged[key] = merged.get(key, 0j) + complex(value)
    threshold = settings.CANONICAL_THRESHOLD
    return {k: merged[k] for k in sorted(merged) if abs(merged[k]) >= threshold}


@dataclass(frozen=True)
class ConvFunction:
    entries: Mapping[GroupoidElement, complex] = field(default_factory=dict)

    @classmethod
    def from_entries(cls, entries: Iterable[Tuple[GroupoidElement, complex]]) -> "ConvFunction":
        return cls(_canonical(entries))

    @classmethod
    def delta(cls, point: Point, group: GroupElement = UNIT, value: complex = 1.0) -> "ConvFunction":
        return cls.from_entries([(GroupoidElement(point, group), value)])

    def get(self, e: GroupoidElement) -> complex:
        return self.entries.get(e, 0j)

    def keys(self) -> Iterable[GroupoidElement]:
        return self.entries.keys()

    def items(self) -> Iterator[Tuple[GroupoidElement, complex]]:
        return iter(self.entries.items())

    def is_zero(self) -> bool:
        return not self.entries

    def support_points(self) -> set[Point]:
        """Range and domain points of every support element."""
        points = set()
        for e in self.entries:
            points.add(e.point)
            points.add(act(e.point, e.group))
        return points

    def __add__(self, other: "ConvFunction") -> "ConvFunction":
        return ConvFunction.from_entries(itertools.chain(self.items(), other.items()))

    def __sub__(self, other: "ConvFunction") -> "ConvFunction":
        return self + (-1) * other

    def __mul__(self, scalar: complex) -> "ConvFunction":
        return ConvFunction.from_entries((e, complex(scalar) * v) for e, v in self.items())

    __rmul__ = __mul__


Convolution = Callable[[ConvFunction, ConvFunction], ConvFunction]


def convolve(f: ConvFunction, h: ConvFunction) -> ConvFunction:
    """(f*h)((x,g)) = sum_{g'} f((x, gg')) h((xgg'^{-1}, g'^{-1})).

    g'^{-1} = g' here. Output keys are the products of composable support
    pairs; the sum is then evaluated over the group elements in h's support.
    """
    h_groups = {e.group for e in h.keys()}
    targets = set()
    for a in f.keys():
        end = act(a.point, a.group)
        for b in h.keys():
            if b.point == end:
                targets.add(GroupoidElement(a.point, a.group * b.group))
    out = []
    for key in targets:
        x, g = key.point, key.group
        total = 0j
        for gp in h_groups:
            left = f.get(GroupoidElement(x, g * gp))
            if left == 0:
                continue
            total += left * h.get(GroupoidElement(act(x, g * gp), gp.inverse()))
        out.append((key, total))
    return ConvFunction.from_entries(out)


def involution(f: ConvFunction) -> ConvFunction:
    """f*((x,g)) = conj f((x,g)^{-1})."""
    return ConvFunction.from_entries((inverse(e), v.conjugate()) for e, v in f.items())


def i_norm(f: ConvFunction) -> float:
    """max(sup_x sum_g |f(x,g)|, sup_x sum_g |f(xg, g^{-1})|)."""
    rows: Dict[Point, float] = defaultdict(float)
    cols: Dict[Point, float] = defaultdict(float)
    for e, v in f.items():
        rows[e.point] += abs(v)
        # f(xg, g^{-1}) contributes to base x = (point) * g
        cols[act(e.point, e.group)] += abs(v)
    return max(max(rows.values(), default=0.0), max(cols.values(), default=0.0))


def local_unit(points: Iterable[Point]) -> ConvFunction:
    return ConvFunction.from_entries((GroupoidElement(p, UNIT), 1.0) for p in points)


@dataclass(frozen=True)
class GroupAlgebraElement:
    entries: Mapping[GroupElement, complex] = field(default_factory=dict)

    @classmethod
    def from_entries(cls, entries: Iterable[Tuple[GroupElement, complex]]) -> "GroupAlgebraElement":
        return cls(_canonical(entries))

    @classmethod
    def delta(cls, g: GroupElement, value: complex = 1.0) -> "GroupAlgebraElement":
        return cls.from_entries([(g, value)])

    def get(self, g: GroupElement) -> complex:
        return self.entries.get(g, 0j)

    def items(self) -> Iterator[Tuple[GroupElement, complex]]:
        return iter(self.entries.items())

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement.from_entries(itertools.chain(self.items(), other.items()))

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-1) * other

    def __mul__(self, scalar: complex) -> "GroupAlgebraElement":
        return GroupAlgebraElement.from_entries((g, complex(scalar) * v) for g, v in self.items())

    __rmul__ = __mul__


def group_convolve(u: GroupAlgebraElement, v: GroupAlgebraElement) -> GroupAlgebraElement:
    """(u*v)(g) = sum_{g'} u(gg') v(g'^{-1})."""
    targets = {a * b for a in u.entries for b in v.entries}
    out = []
    for g in targets:
        total = sum((u.get(g * gp) * v.get(gp.inverse()) for gp in v.entries), 0j)
        out.append((g, total))
    return GroupAlgebraElement.from_entries(out)


def group_involution(u: GroupAlgebraElement) -> GroupAlgebraElement:
    return GroupAlgebraElement.from_entries((g.inverse(), v.conjugate()) for g, v in u.items())


def group_norm(u: GroupAlgebraElement) -> float:
    return sum(abs(v) for v in u.entries.values())


def group_string(g: GroupElement) -> AlgebraElement:
    """g-hat: sigma^1 on every site of the support."""
    return AlgebraElement.from_factors({s: SIGMA_X for s in g.support})


def embed(u: GroupAlgebraElement) -> AlgebraElement:
    return AlgebraElement.from_terms(
        (string, v * coeff) for g, v in u.items() for string, coeff in group_string(g).items()
    )


def expand_over(u: GroupAlgebraElement, points: Iterable[Point]) -> ConvFunction:
    """The x-independent function u restricted to the given base points."""
    return ConvFunction.from_entries(
        (GroupoidElement(p, g), v) for p in points for g, v in u.items()
    )

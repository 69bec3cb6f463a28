"""Seeded random instances for the verification suites."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from qubit_algebras.core.bundle_representation import Section
from qubit_algebras.core.convolution import ConvFunction
from qubit_algebras.core.groupoid import GroupElement, GroupoidElement, Point
from qubit_algebras.core.operator_strings import AlgebraElement
from qubit_algebras.core.site_algebra import LocalOperator, QubitVector
from qubit_algebras.core.theta_space import Configuration, SparseState, ThetaFamily


def random_complex(rng: np.random.Generator) -> complex:
    return complex(rng.normal(), rng.normal())


def random_local_operator(rng: np.random.Generator) -> LocalOperator:
    return LocalOperator(tuple(random_complex(rng) for _ in range(4)))


def random_qubit(rng: np.random.Generator) -> QubitVector:
    v = np.array([random_complex(rng), random_complex(rng)])
    v /= np.linalg.norm(v)
    return QubitVector.from_array(v)


def random_family(rng: np.random.Generator, m: int, overrides: int = 2) -> ThetaFamily:
    sites = rng.choice(np.arange(1, m + 1), size=min(overrides, m), replace=False)
    return ThetaFamily.build(
        tail=random_qubit(rng), overrides={int(s): random_qubit(rng) for s in sites}
    )


def random_element(
    rng: np.random.Generator, m: int, terms: int = 3, max_support: int = 3
) -> AlgebraElement:
    out = AlgebraElement()
    for _ in range(terms):
        k = int(rng.integers(1, min(max_support, m) + 1))
        sites = rng.choice(np.arange(1, m + 1), size=k, replace=False)
        factors = {int(s): random_local_operator(rng) for s in sites}
        out = out + AlgebraElement.from_factors(factors, random_complex(rng))
    return out


def random_state(
    rng: np.random.Generator, family: ThetaFamily, m: int, terms: int = 4
) -> SparseState:
    pairs = []
    for _ in range(terms):
        flips = tuple(int(s) for s in range(1, m + 1) if rng.random() < 0.5)
        pairs.append((Configuration(flips), random_complex(rng)))
    return SparseState.from_terms(family, pairs)


def random_group_element(rng: np.random.Generator, sites: Sequence[int]) -> GroupElement:
    return GroupElement(tuple(int(s) for s in sites if rng.random() < 0.5))


def random_point(rng: np.random.Generator, baseline: str, sites: Sequence[int]) -> Point:
    return Point(baseline, tuple(int(s) for s in sites if rng.random() < 0.5))


def random_groupoid_element(
    rng: np.random.Generator, baselines: Sequence[str], sites: Sequence[int]
) -> GroupoidElement:
    baseline = baselines[int(rng.integers(len(baselines)))]
    return GroupoidElement(random_point(rng, baseline, sites), random_group_element(rng, sites))


def random_conv_function(
    rng: np.random.Generator,
    baselines: Sequence[str],
    sites: Sequence[int],
    entries: int = 4,
) -> ConvFunction:
    return ConvFunction.from_entries(
        (random_groupoid_element(rng, baselines, sites), random_complex(rng))
        for _ in range(entries)
    )


def random_section(
    rng: np.random.Generator,
    family: ThetaFamily,
    points: Sequence[Point],
    sites: Sequence[int],
    max_terms: int = 3,
) -> Section:
    values = []
    for p in points:
        if rng.random() < 0.2:
            continue
        terms = []
        for _ in range(int(rng.integers(1, max_terms + 1))):
            flips = tuple(s for s in sites if rng.random() < 0.5)
            terms.append((Configuration(flips), random_complex(rng)))
        values.append((p, SparseState.from_terms(family, terms)))
    return Section.from_values(family, values)

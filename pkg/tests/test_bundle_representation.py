import math

import numpy as np
import pytest

from qubit_algebras.core.bundle_representation import (
    Section,
    act_by_compose_residual,
    groupoid_act,
    closed_basis,
    l2_inner,
    matrix_on_truncation,
    pi_apply,
    section_norm,
    star_rep_check,
    truncation_norm_bound,
    vacuum_section,
)
from qubit_algebras.core.convolution import ConvFunction, convolve, i_norm
from qubit_algebras.core.groupoid import GroupElement, GroupoidElement, Point, act
from qubit_algebras.core.site_algebra import QubitVector
from qubit_algebras.core.theta_space import Configuration, ThetaFamily, basis_state, vacuum
from qubit_algebras.models.enums import Orientation
from qubit_algebras.models.errors import BasisNotClosed, FamilyMismatch
from qubit_algebras.oracle.sampling import random_conv_function, random_family, random_section

X = Point("zeros")
G1 = GroupElement.of(1)
G2 = GroupElement.of(2)
FAMILY = ThetaFamily()
PLUS = QubitVector(1 / math.sqrt(2), 1 / math.sqrt(2))


def test_sections_merge_and_drop_zero_states():
    s = Section.from_values(FAMILY, [(X, vacuum(FAMILY)), (X, vacuum(FAMILY))])
    assert s.at(X).coefficient(Configuration()) == 2
    assert (s - s).is_zero()
    with pytest.raises(FamilyMismatch):
        Section.from_values(FAMILY, [(X, vacuum(ThetaFamily.build(PLUS)))])


def test_vacuum_section_norm():
    points = [X, act(X, G1), act(X, G2)]
    assert section_norm(vacuum_section(FAMILY, points)) == pytest.approx(math.sqrt(3))
    with pytest.raises(FamilyMismatch):
        l2_inner(vacuum_section(FAMILY, points), vacuum_section(ThetaFamily.build(PLUS), points))


def test_literal_orientation_moves_the_fibre_forward():
    phi = vacuum_section(FAMILY, [X])
    image = pi_apply(ConvFunction.delta(X, G1), phi)
    assert list(image.values) == [act(X, G1)]
    assert image.at(act(X, G1)) == basis_state(FAMILY, [1])


def test_range_orientation_pulls_the_fibre_back():
    phi = vacuum_section(FAMILY, [act(X, G1)])
    image = pi_apply(ConvFunction.delta(X, G1), phi, Orientation.RANGE)
    assert list(image.values) == [X]
    assert image.at(X) == basis_state(FAMILY, [1])


@pytest.mark.parametrize("orientation", list(Orientation))
def test_random_instances_form_a_star_representation(orientation):
    rng = np.random.default_rng(11)
    for i in range(10):
        f = random_conv_function(rng, ["orbit"], [1, 2, 3])
        h = random_conv_function(rng, ["orbit"], [1, 2, 3])
        family = random_family(rng, 4)
        report = star_rep_check(f, h, trials=3, seed=i, family=family, orientation=orientation)
        assert report.passed
        assert report.max_residual < 1e-10


def test_wrong_product_order_is_detected():
    f = ConvFunction.delta(X, G1)
    h = ConvFunction.delta(act(X, G1), G2)
    good = star_rep_check(f, h, trials=10, seed=3)
    bad = star_rep_check(f, h, trials=10, seed=3, convolution=lambda a, b: convolve(b, a))
    assert good.passed
    assert not bad.passed
    assert bad.multiplicative_residual > 1e-3


@pytest.mark.parametrize("orientation", list(Orientation))
def test_sign_flipped_product_is_detected(orientation):
    f = ConvFunction.delta(X, G1)
    h = ConvFunction.delta(act(X, G1), G1, 2 - 1j)

    def flipped(a, b):
        return -1 * convolve(a, b)

    bad = star_rep_check(f, h, trials=10, seed=4, orientation=orientation, convolution=flipped)
    assert not bad.passed
    assert bad.multiplicative_residual > 1e-3


def test_i_norm_bounds_the_represented_action():
    rng = np.random.default_rng(5)
    for _ in range(20):
        f = random_conv_function(rng, ["zeros"], [1, 2])
        phi = random_section(rng, FAMILY, sorted(f.support_points()), [1, 2])
        assert section_norm(pi_apply(f, phi)) <= i_norm(f) * section_norm(phi) + 1e-10


def test_single_delta_is_a_partial_isometry():
    f = ConvFunction.delta(X, G1)
    basis = closed_basis(f, [X], [1])
    assert len(basis) == 4
    m = matrix_on_truncation(f, basis, workers=2)
    assert np.linalg.matrix_rank(m) == 2
    assert np.allclose(m @ m.conj().T @ m, m)
    assert truncation_norm_bound(f, basis) == pytest.approx(1.0)


def test_symmetric_delta_pair_is_a_permutation():
    f = ConvFunction.delta(X, G1) + ConvFunction.delta(act(X, G1), G1)
    basis = closed_basis(f, [X], [1])
    for orientation in Orientation:
        m = matrix_on_truncation(f, basis, orientation=orientation)
        assert np.allclose(m @ m.conj().T, np.eye(len(basis)))
        assert set(np.round(np.abs(m).ravel(), 12)) == {0.0, 1.0}


def test_truncation_must_be_closed():
    f = ConvFunction.delta(X, G1)
    basis = [(X, Configuration()), (X, Configuration.of(1))]
    with pytest.raises(BasisNotClosed):
        matrix_on_truncation(f, basis)


def test_fibre_action_respects_composition():
    family = ThetaFamily.build(PLUS, {2: QubitVector(0, 1)})
    e = GroupoidElement(X, GroupElement.of(1, 2))
    e2 = GroupoidElement(act(X, e.group), GroupElement.of(2, 3))
    v = basis_state(family, [1, 3], 2 - 1j)
    assert act_by_compose_residual(e, e2, v) < 1e-12


def test_fibre_action_flips_the_moved_sites():
    e = GroupoidElement(X, GroupElement.of(1, 3))
    moved = groupoid_act(e, vacuum(FAMILY))
    assert moved.coefficient(Configuration.of(1, 3)) == pytest.approx(1)
    back = groupoid_act(GroupoidElement(act(X, e.group), e.group), moved)
    assert back.coefficient(Configuration()) == pytest.approx(1)

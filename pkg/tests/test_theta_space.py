import math

import numpy as np
import pytest
from hypothesis import given

from qubit_algebras.core.site_algebra import E1, E2, QubitVector
from qubit_algebras.core.theta_space import (
    Configuration,
    SparseState,
    ThetaFamily,
    basis_state,
    canonicalize,
    inner,
    norm,
    theta_perp,
    truncation_configurations,
    vacuum,
    zero_state,
)
from qubit_algebras.models.errors import FamilyMismatch, NotNormalized
from qubit_algebras.oracle.dense import embed_state
from tests.strategies import families, qubits, states

PLUS = QubitVector(1 / math.sqrt(2), 1 / math.sqrt(2))


def test_perp_of_standard_basis():
    assert theta_perp(E1) == E2


@given(qubits())
def test_perp_completes_an_orthonormal_frame(q):
    p = theta_perp(q)
    assert abs(q.dot(p)) < 1e-12
    assert p.norm() == pytest.approx(1.0)


def test_unnormalized_vectors_are_rejected():
    with pytest.raises(NotNormalized):
        ThetaFamily(tail=QubitVector(1, 1))
    with pytest.raises(NotNormalized):
        ThetaFamily.build(E1, {2: QubitVector(0.5, 0)})
    with pytest.raises(NotNormalized):
        theta_perp(QubitVector(2, 0))


def test_family_lookup_and_override_order():
    family = ThetaFamily.build(E1, {3: PLUS, 1: E2})
    assert family.overrides == ((1, E2), (3, PLUS))
    assert family.at(1) == E2
    assert family.at(3) == PLUS
    assert family.at(100) == E1


def test_configuration_is_a_sorted_set():
    assert Configuration((3, 1, 3)).flips == (1, 3)
    assert 3 in Configuration.of(1, 3)
    assert Configuration.of(1).toggled(1) == Configuration()
    assert Configuration.of(1).with_site(2, True) == Configuration.of(1, 2)


def test_from_terms_merges_duplicates_and_prunes():
    family = ThetaFamily()
    c = Configuration.of(2)
    u = SparseState.from_terms(family, [(c, 1.0), (c, 2.0), (Configuration.of(1), 1e-16)])
    assert dict(u.items()) == {c: 3.0}
    assert SparseState.from_terms(family, [(c, 1), (c, -1)]).is_zero()


def test_canonicalize_is_idempotent():
    family = ThetaFamily()
    raw = SparseState(family, {Configuration.of(2): 1j, Configuration(): 0j})
    once = canonicalize(raw)
    assert once == canonicalize(once)
    assert list(once.terms) == [Configuration.of(2)]


def test_configurations_form_an_orthonormal_basis():
    family = ThetaFamily.build(PLUS)
    a, b = basis_state(family, [1]), basis_state(family, [1, 2])
    assert inner(a, a) == 1
    assert inner(a, b) == 0
    assert norm(vacuum(family)) == 1.0
    assert norm(zero_state(family)) == 0.0


@given(families())
def test_inner_is_hermitian_and_conjugate_linear(family):
    u = SparseState.from_terms(family, [(Configuration.of(1), 1 + 2j), (Configuration(), 3)])
    v = SparseState.from_terms(family, [(Configuration.of(1), -1j), (Configuration.of(2), 1)])
    assert inner(u, v) == pytest.approx(inner(v, u).conjugate())
    assert inner(2j * u, v) == pytest.approx(-2j * inner(u, v))


def test_state_arithmetic():
    family = ThetaFamily()
    u = basis_state(family, [1], 2.0)
    v = basis_state(family, [1], 3.0)
    assert (u + v).coefficient(Configuration.of(1)) == 5
    assert (u - u).is_zero()
    assert (-u).coefficient(Configuration.of(1)) == -2


def test_mixing_families_fails():
    a = vacuum(ThetaFamily())
    b = vacuum(ThetaFamily.build(PLUS))
    with pytest.raises(FamilyMismatch):
        inner(a, b)
    with pytest.raises(FamilyMismatch):
        a + b


def test_redundant_overrides_do_not_split_families():
    plain = ThetaFamily()
    padded = ThetaFamily.build(E1, {3: E1})
    assert padded.overrides == ()
    assert padded == plain
    assert hash(padded) == hash(plain)
    assert inner(vacuum(plain), vacuum(padded)) == 1

    noisy = ThetaFamily.build(QubitVector(PLUS.c1 + 1e-15, PLUS.c2), {2: E2})
    assert noisy == ThetaFamily.build(PLUS, {2: E2})
    assert noisy != ThetaFamily.build(PLUS)


@given(families())
def test_truncation_configurations_embed_as_an_orthonormal_basis(family):
    m = 3
    vectors = np.array(
        [embed_state(m, SparseState(family, {c: 1 + 0j})) for c in truncation_configurations(m)]
    )
    gram = vectors.conj() @ vectors.T
    assert np.allclose(gram, np.eye(2**m), atol=1e-12)


def test_truncation_configurations_follow_kronecker_order():
    assert truncation_configurations(2) == [
        Configuration(),
        Configuration.of(2),
        Configuration.of(1),
        Configuration.of(1, 2),
    ]
    assert len(truncation_configurations(4)) == 16


@given(families().flatmap(lambda f: states(f)))
def test_norm_is_sum_of_squares(u):
    expected = math.sqrt(sum(abs(c) ** 2 for _, c in u.items()))
    assert norm(u) == pytest.approx(expected, abs=1e-12)

import numpy as np
import pytest

from qubit_algebras.core.car_fermions import (
    annihilator,
    annihilator_without_chain,
    anticommutator,
    car_relations_check,
    creator,
    cyclicity_rank,
    number_operator,
)
from qubit_algebras.core.operator_strings import LocalString, identity, site_operator, string_mul
from qubit_algebras.core.site_algebra import E12, SIGMA_X, SIGMA_Y, SIGMA_Z
from qubit_algebras.models.errors import TooLarge
from qubit_algebras.oracle.dense import kron_string


def test_generator_shape():
    assert annihilator(1) == site_operator(1, E12)
    assert dict(annihilator(1).items()) == pytest.approx(
        {LocalString(((1, SIGMA_X),)): 0.5, LocalString(((1, SIGMA_Y),)): 0.5j}
    )
    chain = LocalString(((1, SIGMA_Z), (2, SIGMA_Z), (3, SIGMA_X)))
    assert annihilator(3).coefficient(chain) == pytest.approx(0.5)
    assert annihilator(3).sites() == {1, 2, 3}


def test_creator_is_the_adjoint():
    assert np.allclose(kron_string(3, creator(2)), kron_string(3, annihilator(2)).conj().T)


def test_relations_hold_on_small_and_full_ranges():
    report = car_relations_check(3)
    assert report.passed
    assert report.max_residual < 1e-12
    assert car_relations_check(8).passed


def test_dropping_the_chain_breaks_anticommutation():
    report = car_relations_check(2, annihilator_without_chain)
    assert not report.passed
    assert any("a_1, a_2" in name for name in report.failures)


def test_sparse_anticommutators_agree_with_dense():
    eye = np.eye(8)
    assert np.allclose(kron_string(3, anticommutator(annihilator(2), creator(2))), eye)
    assert np.allclose(kron_string(3, anticommutator(annihilator(1), creator(3))), 0)
    assert anticommutator(annihilator(2), annihilator(2)).is_zero()


def test_sparse_anticommutators_reduce_to_normal_form():
    assert anticommutator(annihilator(1), annihilator(2)).is_zero()
    assert anticommutator(creator(1), creator(3)).is_zero()
    assert anticommutator(annihilator(1), creator(1)) == identity()
    assert anticommutator(annihilator(3), creator(3)) == identity()
    assert anticommutator(annihilator(2), creator(1)).is_zero()


def test_number_operators_are_commuting_projections():
    n1, n2 = number_operator(1), number_operator(2)
    d1, d2 = kron_string(3, n1), kron_string(3, n2)
    assert np.allclose(kron_string(3, string_mul(n1, n1)), d1)
    assert np.allclose(d1 @ d2, d2 @ d1)


def test_size_limits():
    with pytest.raises(TooLarge):
        car_relations_check(9)
    with pytest.raises(ValueError):
        annihilator(0)
    with pytest.raises(ValueError):
        car_relations_check(0)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_vacuum_is_cyclic_on_truncations(m):
    assert cyclicity_rank(m) == 2**m

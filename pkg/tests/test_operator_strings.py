import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qubit_algebras.core.operator_strings import (
    IDENTITY_STRING,
    AlgebraElement,
    LocalString,
    apply,
    expand_string,
    full_algebra_rank,
    identity,
    pauli_basis,
    pauli_string,
    site_operator,
    string_adjoint,
    string_mul,
    tensor_norm_pauli,
    truncation_matrix,
    truncation_operator_norm,
    zero,
)
from qubit_algebras.core.site_algebra import (
    E12,
    E21,
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    LocalOperator,
    QubitVector,
)
from qubit_algebras.core.theta_space import Configuration, ThetaFamily, basis_state, inner, vacuum
from qubit_algebras.models.errors import NotElementary, TooLarge
from qubit_algebras.oracle.dense import compare_apply, kron_string
from tests.strategies import algebra_elements, families, local_operators, states

PLUS = QubitVector(1 / math.sqrt(2), 1 / math.sqrt(2))
E11 = LocalOperator((1, 0, 0, 0))
E22 = LocalOperator((0, 0, 0, 1))


def test_scalar_factors_fold_into_the_coefficient():
    ((string, coeff),) = expand_string({2: SIGMA_X, 1: 2 * IDENTITY})
    assert coeff == pytest.approx(2)
    assert string == LocalString(((2, SIGMA_X),))

    a = AlgebraElement.from_factors({1: 2 * IDENTITY, 2: SIGMA_X}, 3)
    assert dict(a.items()) == pytest.approx({LocalString(((2, SIGMA_X),)): 6})


def test_factors_expand_into_pauli_letters():
    lowering = site_operator(1, E12)
    assert dict(lowering.items()) == pytest.approx(
        {LocalString(((1, SIGMA_X),)): 0.5, LocalString(((1, SIGMA_Y),)): 0.5j}
    )
    projection = site_operator(3, E11)
    assert dict(projection.items()) == pytest.approx(
        {IDENTITY_STRING: 0.5, LocalString(((3, SIGMA_Z),)): 0.5}
    )


def test_equal_elements_share_one_normal_form():
    assert (site_operator(1, 2 * SIGMA_X) - site_operator(1, SIGMA_X, 2)).is_zero()
    assert site_operator(1, E11) + site_operator(1, E22) == identity()
    assert string_adjoint(site_operator(2, E12)) == site_operator(2, E21)


def test_identity_factors_collapse_to_the_unit():
    assert AlgebraElement.from_factors({1: IDENTITY, 5: IDENTITY}) == identity()
    assert identity().coefficient(IDENTITY_STRING) == 1
    assert zero().is_zero()


def test_linear_combinations_merge_equal_strings():
    a = site_operator(1, SIGMA_X, 2) + site_operator(1, SIGMA_X, -2)
    assert a.is_zero()
    b = site_operator(1, SIGMA_X) + pauli_string({1: "X"})
    assert b.coefficient(LocalString(((1, SIGMA_X),))) == 2


def test_pauli_products():
    x = pauli_string({1: "X"})
    y = pauli_string({1: "Y"})
    assert string_mul(x, x) == identity()
    assert np.allclose(kron_string(1, x @ y), 1j * SIGMA_Z.matrix)


def test_products_on_disjoint_sites_commute():
    x1 = pauli_string({1: "X"})
    z2 = pauli_string({2: "Z"})
    assert string_mul(x1, z2) == string_mul(z2, x1)
    assert string_mul(x1, z2).sites() == {1, 2}


@given(algebra_elements(), algebra_elements())
def test_product_matches_dense(a, b):
    expected = kron_string(3, a) @ kron_string(3, b)
    assert np.allclose(kron_string(3, string_mul(a, b)), expected, atol=1e-9)


@given(algebra_elements())
def test_adjoint_matches_dense(a):
    assert np.allclose(kron_string(3, string_adjoint(a)), kron_string(3, a).conj().T, atol=1e-9)


@given(families().flatmap(lambda f: states(f).map(lambda u: (f, u))), algebra_elements())
def test_apply_matches_dense(pair, a):
    _, u = pair
    assert compare_apply(3, a, u) < 1e-9


def test_apply_uses_the_local_frame():
    family = ThetaFamily.build(PLUS)
    flipped = basis_state(family, [1])
    # sigma^1 fixes (1,1)/sqrt2 and negates its perp
    image = apply(pauli_string({1: "X"}), flipped)
    assert image.coefficient(Configuration.of(1)) == pytest.approx(-1)
    fixed = apply(pauli_string({1: "X"}), vacuum(family))
    assert dict(fixed.items()) == pytest.approx({Configuration(): 1})


def test_lowering_returns_to_vacuum():
    family = ThetaFamily()
    image = apply(site_operator(1, E12), basis_state(family, [1]))
    assert dict(image.items()) == pytest.approx({Configuration(): 1})
    assert apply(site_operator(1, E12), vacuum(family)).is_zero()


def test_tensor_norm_of_elementary_strings():
    s = LocalString(((1, IDENTITY + SIGMA_X),))
    assert tensor_norm_pauli(s) == pytest.approx(math.sqrt(2))
    assert tensor_norm_pauli(IDENTITY_STRING) == 1
    assert tensor_norm_pauli(LocalString(((1, SIGMA_X), (2, SIGMA_Z)))) == pytest.approx(1)
    assert tensor_norm_pauli(pauli_string({1: "X", 2: "Y"}, -2j)) == pytest.approx(2)
    with pytest.raises(NotElementary):
        tensor_norm_pauli(pauli_string({1: "X"}) + pauli_string({2: "Y"}))
    with pytest.raises(NotElementary):
        tensor_norm_pauli(site_operator(1, IDENTITY + SIGMA_X))


@given(local_operators(), local_operators(), local_operators())
def test_tensor_norm_is_multiplicative_over_disjoint_sites(a, b, c):
    left = LocalString(((1, a), (2, b)))
    right = LocalString(((4, c),))
    joined = LocalString(left.factors + right.factors)
    expected = tensor_norm_pauli(left) * tensor_norm_pauli(right)
    assert tensor_norm_pauli(joined) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_truncation_operator_norm():
    a = site_operator(1, IDENTITY + SIGMA_X)
    assert truncation_operator_norm(a, 2) == pytest.approx(2.0)


@given(algebra_elements())
def test_standard_family_truncation_is_the_kronecker_matrix(a):
    assert np.allclose(truncation_matrix(a, 3), kron_string(3, a), atol=1e-9)


def test_pauli_strings_span_the_full_matrix_algebra():
    assert len(pauli_basis(2)) == 16
    assert full_algebra_rank(1) == 4
    assert full_algebra_rank(2) == 16
    assert full_algebra_rank(2, ThetaFamily.build(PLUS)) == 16


def test_rank_refuses_large_truncations():
    with pytest.raises(TooLarge):
        full_algebra_rank(7)


def _family_and_two_states():
    return families().flatmap(lambda f: st.tuples(states(f), states(f)))


def _largest(*values):
    return max([1.0, *values])


@given(_family_and_two_states(), algebra_elements())
def test_apply_respects_the_adjoint(pair, a):
    u, v = pair
    lhs = inner(apply(string_adjoint(a), u), v)
    rhs = inner(u, apply(a, v))
    assert abs(lhs - rhs) < 1e-10 * _largest(abs(lhs), abs(rhs))


@given(_family_and_two_states(), algebra_elements(), algebra_elements())
def test_apply_is_multiplicative(pair, a, b):
    u, _ = pair
    direct = apply(string_mul(a, b), u)
    nested = apply(a, apply(b, u))
    scale = _largest(*(abs(c) for _, c in nested.items()))
    assert max((abs(c) for _, c in (direct - nested).items()), default=0.0) < 1e-10 * scale


@given(algebra_elements(), algebra_elements(), algebra_elements())
def test_string_product_is_associative_with_unit(a, b, c):
    left = string_mul(string_mul(a, b), c)
    right = string_mul(a, string_mul(b, c))
    assert (left - right).max_abs_coefficient() < 1e-10 * _largest(left.max_abs_coefficient())
    assert string_mul(identity(), a) == a
    assert string_mul(a, identity()) == a


@given(algebra_elements(), algebra_elements())
def test_adjoint_is_involutive_and_reverses_products(a, b):
    assert (string_adjoint(string_adjoint(a)) - a).max_abs_coefficient() < 1e-12
    ab_star = string_adjoint(string_mul(a, b))
    expected = string_mul(string_adjoint(b), string_adjoint(a))
    assert (ab_star - expected).max_abs_coefficient() < 1e-10 * _largest(
        ab_star.max_abs_coefficient()
    )

import json
import math

import pytest

from qubit_algebras.core.convolution import ConvFunction, GroupAlgebraElement
from qubit_algebras.core.groupoid import GroupElement, GroupoidElement, Point
from qubit_algebras.core.operator_strings import pauli_string
from qubit_algebras.core.rep_equivalence import ParametricFamily
from qubit_algebras.core.site_algebra import E1, E2
from qubit_algebras.core.theta_space import Configuration, ThetaFamily, basis_state
from qubit_algebras.models.errors import InputFormatError
from qubit_algebras.services.loaders import (
    conv_to_schema,
    family_to_schema,
    group_algebra_to_schema,
    load_algebra,
    load_conv_function,
    load_group_algebra,
    load_reference_family,
    load_section,
    load_state,
    state_to_schema,
    write_json,
)


def dump(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return path


def test_family_file(tmp_path):
    r = 1 / math.sqrt(2)
    payload = {"tail": [[r, 0], [r, 0]], "overrides": {"2": [[0, 0], [1, 0]]}}
    path = dump(tmp_path, "f.json", payload)
    family = load_reference_family(path)
    assert family.at(2) == E2
    assert family.tail.c1 == pytest.approx(r)


def test_rotation_family_file(tmp_path):
    path = dump(tmp_path, "f.json", {"rotation": {"angle": 0.5, "decay": 1.0}})
    family = load_reference_family(path)
    assert isinstance(family, ParametricFamily)
    assert family.at(1).c1 == pytest.approx(math.cos(0.5))
    assert family.at(4).c2 == pytest.approx(math.sin(0.125))


def test_rule_given_family_cannot_carry_states(tmp_path):
    payload = {"family": {"rotation": {"angle": 0.5}}, "terms": [{"flips": [], "coeff": [1, 0]}]}
    with pytest.raises(InputFormatError):
        load_state(dump(tmp_path, "u.json", payload))


def test_family_survives_a_file_round_trip(tmp_path):
    family = ThetaFamily.build(E1, {3: E2})
    path = tmp_path / "f.json"
    write_json(path, family_to_schema(family))
    assert load_reference_family(path) == family


def test_unnormalized_family_is_an_input_error(tmp_path):
    path = dump(tmp_path, "f.json", {"tail": [[2, 0], [0, 0]]})
    with pytest.raises(InputFormatError):
        load_reference_family(path)


def test_missing_and_malformed_files(tmp_path):
    with pytest.raises(InputFormatError):
        load_conv_function(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputFormatError):
        load_conv_function(bad)
    with pytest.raises(InputFormatError):
        load_state(dump(tmp_path, "s.json", {"terms": [{"flips": [1], "coeff": [1]}]}))


def test_state_and_algebra_files(tmp_path):
    state = load_state(
        dump(
            tmp_path,
            "s.json",
            {"terms": [{"flips": [2, 1], "coeff": [0, 1]}, {"flips": [1, 2], "coeff": [1, 0]}]},
        )
    )
    assert state.family == ThetaFamily()
    assert state.coefficient(Configuration.of(1, 2)) == 1 + 1j

    algebra = load_algebra(
        dump(tmp_path, "a.json", {"terms": [{"coeff": [2, 0], "factors": {"1": "X", "3": "Z"}}]})
    )
    assert algebra == 2 * pauli_string({1: "X", 3: "Z"})


def test_conv_and_group_files_round_trip(tmp_path):
    f = ConvFunction.from_entries(
        [(GroupoidElement(Point("zeros", (1,)), GroupElement.of(2)), 1 - 1j)]
    )
    write_json(tmp_path / "f.json", conv_to_schema(f))
    assert load_conv_function(tmp_path / "f.json") == f

    u = GroupAlgebraElement.from_entries([(GroupElement.of(1, 3), 0.5j)])
    write_json(tmp_path / "u.json", group_algebra_to_schema(u))
    assert load_group_algebra(tmp_path / "u.json") == u


def test_section_file(tmp_path):
    payload = {
        "family": family_to_schema(ThetaFamily.build(E1, {1: E2})).model_dump(mode="json"),
        "values": [
            {
                "point": {"baseline": "zeros", "flips": [1]},
                "state": {"terms": [{"flips": [], "coeff": [1, 0]}]},
            }
        ],
    }
    section = load_section(dump(tmp_path, "sec.json", payload))
    assert section.family.at(1) == E2
    assert section.at(Point("zeros", (1,))).coefficient(Configuration()) == 1


def test_state_schema_carries_the_family():
    schema = state_to_schema(basis_state(ThetaFamily(), [1], 2j))
    assert schema.family is not None
    assert schema.terms[0].flips == [1]
    assert schema.terms[0].coeff == (0.0, 2.0)

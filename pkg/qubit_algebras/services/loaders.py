"""Reading and writing the JSON file formats."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from qubit_algebras.core.bundle_representation import Section
from qubit_algebras.core.convolution import ConvFunction, GroupAlgebraElement
from qubit_algebras.core.groupoid import GroupElement, GroupoidElement, Point
from qubit_algebras.core.operator_strings import AlgebraElement
from qubit_algebras.core.rep_equivalence import ParametricFamily, rotation_family
from qubit_algebras.core.site_algebra import (
    QubitVector,
    dump_scalar,
    parse_local_operator,
    parse_scalar,
)
from qubit_algebras.core.theta_space import Configuration, SparseState, ThetaFamily
from qubit_algebras.models.errors import InputFormatError
from qubit_algebras.models.schemas import (
    AlgebraSchema,
    ConvEntrySchema,
    ConvFunctionSchema,
    FamilySchema,
    GroupAlgebraSchema,
    GroupEntrySchema,
    PointSchema,
    SectionSchema,
    StateSchema,
    StateTermSchema,
)
from qubit_algebras.utils.logger import get_logger

logger = get_logger(__name__)

SchemaT = TypeVar("SchemaT", bound=BaseModel)


def read_schema(path: str | Path, schema: Type[SchemaT]) -> SchemaT:
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        logger.warning("input_unreadable", path=str(path), error=str(exc))
        raise InputFormatError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        logger.warning("input_not_utf8", path=str(path), position=exc.start)
        raise InputFormatError(f"{path} is not UTF-8 text") from exc
    try:
        return schema.model_validate_json(raw)
    except ValidationError as exc:
        logger.warning("input_invalid", path=str(path), errors=exc.error_count())
        raise InputFormatError(f"{path}: {exc.error_count()} validation error(s)") from exc


def qubit_from_schema(value) -> QubitVector:
    return QubitVector(parse_scalar(value[0]), parse_scalar(value[1]))


def family_from_schema(schema: FamilySchema) -> ThetaFamily:
    if schema.rotation is not None:
        raise InputFormatError("a rule-given family cannot carry states or sections")
    try:
        return ThetaFamily.build(
            tail=qubit_from_schema(schema.tail),
            overrides={s: qubit_from_schema(q) for s, q in schema.overrides.items()},
        )
    except ValueError as exc:
        raise InputFormatError(f"invalid family: {exc}") from exc


def reference_family_from_schema(schema: FamilySchema) -> ThetaFamily | ParametricFamily:
    if schema.rotation is None:
        return family_from_schema(schema)
    return rotation_family(schema.rotation.angle, schema.rotation.decay)


def family_to_schema(family: ThetaFamily) -> FamilySchema:
    def dump(q: QubitVector):
        return (tuple(dump_scalar(q.c1)), tuple(dump_scalar(q.c2)))

    return FamilySchema(
        tail=dump(family.tail),
        overrides={s: dump(q) for s, q in family.overrides},
    )


def state_from_schema(schema: StateSchema, family: Optional[ThetaFamily] = None) -> SparseState:
    if family is None:
        family = family_from_schema(schema.family or FamilySchema())
    return SparseState.from_terms(
        family, ((Configuration(tuple(t.flips)), parse_scalar(t.coeff)) for t in schema.terms)
    )


def state_to_schema(u: SparseState, with_family: bool = True) -> StateSchema:
    return StateSchema(
        family=family_to_schema(u.family) if with_family else None,
        terms=[
            StateTermSchema(flips=list(c.flips), coeff=tuple(dump_scalar(v)))
            for c, v in u.items()
        ],
    )


def algebra_from_schema(schema: AlgebraSchema) -> AlgebraElement:
    out = AlgebraElement()
    for term in schema.terms:
        factors = {s: parse_local_operator(v) for s, v in term.factors.items()}
        out = out + AlgebraElement.from_factors(factors, parse_scalar(term.coeff))
    return out


def point_from_schema(schema: PointSchema) -> Point:
    return Point(schema.baseline, tuple(schema.flips))


def point_to_schema(p: Point) -> PointSchema:
    return PointSchema(baseline=p.baseline, flips=list(p.flips))


def conv_from_schema(schema: ConvFunctionSchema) -> ConvFunction:
    return ConvFunction.from_entries(
        (
            GroupoidElement(point_from_schema(e.point), GroupElement(tuple(e.group))),
            parse_scalar(e.value),
        )
        for e in schema.entries
    )


def conv_to_schema(f: ConvFunction) -> ConvFunctionSchema:
    return ConvFunctionSchema(
        entries=[
            ConvEntrySchema(
                point=point_to_schema(e.point),
                group=list(e.group.support),
                value=tuple(dump_scalar(v)),
            )
            for e, v in f.items()
        ]
    )


def group_algebra_from_schema(schema: GroupAlgebraSchema) -> GroupAlgebraElement:
    return GroupAlgebraElement.from_entries(
        (GroupElement(tuple(e.group)), parse_scalar(e.value)) for e in schema.entries
    )


def group_algebra_to_schema(u: GroupAlgebraElement) -> GroupAlgebraSchema:
    return GroupAlgebraSchema(
        entries=[
            GroupEntrySchema(group=list(g.support), value=tuple(dump_scalar(v)))
            for g, v in u.items()
        ]
    )


def section_from_schema(schema: SectionSchema) -> Section:
    family = family_from_schema(schema.family)
    return Section.from_values(
        family,
        ((point_from_schema(v.point), state_from_schema(v.state, family)) for v in schema.values),
    )


def load_reference_family(path: str | Path) -> ThetaFamily | ParametricFamily:
    return reference_family_from_schema(read_schema(path, FamilySchema))


def load_state(path: str | Path) -> SparseState:
    return state_from_schema(read_schema(path, StateSchema))


def load_algebra(path: str | Path) -> AlgebraElement:
    return algebra_from_schema(read_schema(path, AlgebraSchema))


def load_conv_function(path: str | Path) -> ConvFunction:
    return conv_from_schema(read_schema(path, ConvFunctionSchema))


def load_group_algebra(path: str | Path) -> GroupAlgebraElement:
    return group_algebra_from_schema(read_schema(path, GroupAlgebraSchema))


def load_section(path: str | Path) -> Section:
    return section_from_schema(read_schema(path, SectionSchema))


def write_json(path: str | Path, model: BaseModel) -> None:
    Path(path).write_text(json.dumps(model.model_dump(mode="json"), indent=2), encoding="utf-8")

"""Pydantic schemas for input files and run reports."""
from __future__ import annotations

from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from qubit_algebras.models.enums import CheckStatus, PauliLetter

Scalar = Tuple[float, float]
Qubit = Tuple[Scalar, Scalar]
MatrixRow = Tuple[Scalar, Scalar]
Matrix = Tuple[MatrixRow, MatrixRow]


class RotationSchema(BaseModel):
    """theta_s = (cos(angle * s**-decay), sin(angle * s**-decay))."""

    angle: float
    decay: float = 0.0


class FamilySchema(BaseModel):
    tail: Qubit = ((1.0, 0.0), (0.0, 0.0))
    overrides: Dict[int, Qubit] = Field(default_factory=dict)
    rotation: Optional[RotationSchema] = None


class StateTermSchema(BaseModel):
    flips: List[int] = Field(default_factory=list)
    coeff: Scalar


class StateSchema(BaseModel):
    family: Optional[FamilySchema] = None
    terms: List[StateTermSchema] = Field(default_factory=list)


class AlgebraTermSchema(BaseModel):
    coeff: Scalar = (1.0, 0.0)
    factors: Dict[int, Union[PauliLetter, Matrix]] = Field(default_factory=dict)


class AlgebraSchema(BaseModel):
    terms: List[AlgebraTermSchema] = Field(default_factory=list)


class PointSchema(BaseModel):
    baseline: str
    flips: List[int] = Field(default_factory=list)


class ConvEntrySchema(BaseModel):
    point: PointSchema
    group: List[int] = Field(default_factory=list)
    value: Scalar


class ConvFunctionSchema(BaseModel):
    entries: List[ConvEntrySchema] = Field(default_factory=list)


class GroupEntrySchema(BaseModel):
    group: List[int] = Field(default_factory=list)
    value: Scalar


class GroupAlgebraSchema(BaseModel):
    entries: List[GroupEntrySchema] = Field(default_factory=list)


class SectionValueSchema(BaseModel):
    point: PointSchema
    state: StateSchema


class SectionSchema(BaseModel):
    family: FamilySchema = Field(default_factory=FamilySchema)
    values: List[SectionValueSchema] = Field(default_factory=list)


class CheckDetail(BaseModel):
    name: str
    status: CheckStatus
    residual: float = 0.0
    tolerance: Optional[float] = None
    info: Dict[str, Union[str, int, float, bool]] = Field(default_factory=dict)


class RunReport(BaseModel):
    command: str
    status: CheckStatus
    max_residual: float = 0.0
    seed: Optional[int] = None
    details: List[CheckDetail] = Field(default_factory=list)

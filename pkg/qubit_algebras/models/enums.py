"""Enumerations shared across modules."""
from enum import Enum


class PauliLetter(str, Enum):
    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class VerdictStatus(str, Enum):
    EQUIVALENT = "Equivalent"
    INEQUIVALENT = "Inequivalent"
    INCONCLUSIVE = "Inconclusive"


class NormKind(str, Enum):
    I_NORM = "i-norm"
    GROUP = "group"


class Orientation(str, Enum):
    FORWARD = "forward"
    RANGE = "range"

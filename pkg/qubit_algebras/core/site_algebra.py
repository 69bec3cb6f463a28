"""Single-site 2x2 complex matrices, Pauli decomposition and site norms."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from qubit_algebras.config import settings
from qubit_algebras.models.enums import PauliLetter
from qubit_algebras.models.errors import InputFormatError

PauliCoeffs = Tuple[complex, complex, complex, complex]


def _check_finite(values: Sequence[complex]) -> None:
    for value in values:
        if not cmath.isfinite(value):
            raise InputFormatError(f"non-finite scalar {value!r}")


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """Element of M2, entries stored row-major."""

    entries: Tuple[complex, complex, complex, complex]

    def __post_init__(self) -> None:
        if len(self.entries) != 4:
            raise InputFormatError(f"expected 4 entries, got {len(self.entries)}")
        object.__setattr__(self, "entries", tuple(complex(v) for v in self.entries))
        _check_finite(self.entries)
        digits = settings.STRING_KEY_DECIMALS
        # +0.0 folds negative zeros produced by rounding
        key = tuple(
            (round(v.real, digits) + 0.0, round(v.imag, digits) + 0.0) for v in self.entries
        )
        object.__setattr__(self, "_key", key)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray | Sequence[Sequence[complex]]) -> "LocalOperator":
        arr = np.asarray(matrix, dtype=complex)
        if arr.shape != (2, 2):
            raise InputFormatError(f"expected a 2x2 matrix, got shape {arr.shape}")
        return cls(tuple(complex(v) for v in arr.reshape(4)))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.entries, dtype=complex).reshape(2, 2)

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalOperator):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __mul__(self, other: complex) -> "LocalOperator":
        return LocalOperator(tuple(complex(other) * v for v in self.entries))

    __rmul__ = __mul__

    def __add__(self, other: "LocalOperator") -> "LocalOperator":
        return LocalOperator(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "LocalOperator") -> "LocalOperator":
        return LocalOperator(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __matmul__(self, other: "LocalOperator") -> "LocalOperator":
        return mul2(self, other)


@dataclass(frozen=True)
class QubitVector:
    c1: complex
    c2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))
        _check_finite((self.c1, self.c2))

    @classmethod
    def from_array(cls, values: Sequence[complex]) -> "QubitVector":
        if len(values) != 2:
            raise InputFormatError(f"expected 2 components, got {len(values)}")
        return cls(complex(values[0]), complex(values[1]))

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2], dtype=complex)

    def norm(self) -> float:
        return math.hypot(abs(self.c1), abs(self.c2))

    def dot(self, other: "QubitVector") -> complex:
        """Hermitian form <self|other>, conjugate-linear in self."""
        return self.c1.conjugate() * other.c1 + self.c2.conjugate() * other.c2

    def scaled(self, factor: complex) -> "QubitVector":
        return QubitVector(factor * self.c1, factor * self.c2)

    def key(self) -> tuple:
        digits = settings.STRING_KEY_DECIMALS
        return tuple(
            (round(v.real, digits) + 0.0, round(v.imag, digits) + 0.0) for v in (self.c1, self.c2)
        )

    def close_to(self, other: "QubitVector", tol: float) -> bool:
        return abs(self.c1 - other.c1) <= tol and abs(self.c2 - other.c2) <= tol


IDENTITY = LocalOperator((1, 0, 0, 1))
SIGMA_X = LocalOperator((0, 1, 1, 0))
SIGMA_Y = LocalOperator((0, -1j, 1j, 0))
SIGMA_Z = LocalOperator((1, 0, 0, -1))
ZERO = LocalOperator((0, 0, 0, 0))
E12 = LocalOperator((0, 1, 0, 0))
E21 = LocalOperator((0, 0, 1, 0))

PAULI = {
    PauliLetter.I: IDENTITY,
    PauliLetter.X: SIGMA_X,
    PauliLetter.Y: SIGMA_Y,
    PauliLetter.Z: SIGMA_Z,
}

E1 = QubitVector(1, 0)
E2 = QubitVector(0, 1)


def mul2(a: LocalOperator, b: LocalOperator) -> LocalOperator:
    return LocalOperator.from_matrix(a.matrix @ b.matrix)


def adjoint2(a: LocalOperator) -> LocalOperator:
    return LocalOperator.from_matrix(a.matrix.conj().T)


def pauli_components(a: LocalOperator) -> PauliCoeffs:
    """Trace coefficients of a = c0*1 + c1*sx + c2*sy + c3*sz."""
    m = a.matrix
    c0, c1, c2, c3 = (complex(np.trace(PAULI[p].matrix @ m)) / 2 for p in PauliLetter)
    return c0, c1, c2, c3


def pauli_coeffs(a: LocalOperator) -> PauliCoeffs:
    """Coefficients of a = i*l0*1 + l1*sx + l2*sy + l3*sz.

    The identity component carries an explicit factor i, so the identity
    itself has l0 = -i.
    """
    c0, c1, c2, c3 = pauli_components(a)
    return -1j * c0, c1, c2, c3


def reconstruct(coeffs: PauliCoeffs) -> LocalOperator:
    l0, l1, l2, l3 = coeffs
    return (1j * l0) * IDENTITY + l1 * SIGMA_X + l2 * SIGMA_Y + l3 * SIGMA_Z


def site_norm_pauli(a: LocalOperator) -> float:
    return math.sqrt(sum(abs(c) ** 2 for c in pauli_coeffs(a)))


def site_norm_operator(a: LocalOperator) -> float:
    """Largest singular value, closed form for 2x2."""
    p, q, r, s = a.entries
    frob2 = abs(p) ** 2 + abs(q) ** 2 + abs(r) ** 2 + abs(s) ** 2
    det = abs(p * s - q * r)
    disc = max(frob2 * frob2 - 4.0 * det * det, 0.0)
    return math.sqrt((frob2 + math.sqrt(disc)) / 2.0)


def scalar_part(a: LocalOperator, tol: Optional[float] = None) -> Optional[complex]:
    """Return c when a is within tol of c*1, else None."""
    tol = settings.CANONICAL_THRESHOLD if tol is None else tol
    p, q, r, s = a.entries
    if abs(q) > tol or abs(r) > tol or abs(p - s) > tol:
        return None
    return (p + s) / 2


def parse_scalar(value: Sequence[float]) -> complex:
    if len(value) != 2:
        raise InputFormatError(f"scalar must be [re, im], got {value!r}")
    z = complex(float(value[0]), float(value[1]))
    _check_finite((z,))
    return z


def parse_local_operator(value: str | Sequence[Sequence[Sequence[float]]]) -> LocalOperator:
    if isinstance(value, str):
        try:
            return PAULI[PauliLetter(value.upper())]
        except ValueError as exc:
            raise InputFormatError(f"unknown Pauli letter {value!r}") from exc
    if len(value) != 2 or any(len(row) != 2 for row in value):
        raise InputFormatError("matrix must be a 2x2 nested array of [re, im] pairs")
    return LocalOperator(tuple(parse_scalar(cell) for row in value for cell in row))


def dump_scalar(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]

"""Dense matrix value type over the real and complex fields."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum
from typing import Any, NamedTuple

import numpy as np
import numpy.typing as npt

from svineq.errors import DimensionError, InvariantError

Array = npt.NDArray[Any]


class Field(StrEnum):
    """Scalar field a matrix lives over."""

    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self) -> type[np.floating[Any]] | type[np.complexfloating[Any, Any]]:
        return np.float64 if self is Field.REAL else np.complex128


class Scalar(NamedTuple):
    """One matrix entry. `im` is always 0 in the real field."""

    re: float
    im: float = 0.0

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.re) and math.isfinite(self.im)


@dataclass(frozen=True, eq=False)
class MatrixF:
    """Immutable dense m×n matrix with a field tag.

    The entries are held in a read-only numpy array of dtype float64 (real
    field) or complex128 (complex field). Construction validates shape and
    finiteness, so every instance satisfies its invariants.

    Use `MatrixF.from_array` rather than the raw constructor.
    """

    values: Array
    field: Field

    def __post_init__(self) -> None:
        if self.values.ndim != 2:
            raise InvariantError(f"expected a 2-d array, got ndim={self.values.ndim}")
        rows, cols = self.values.shape
        if rows < 1 or cols < 1:
            raise InvariantError(f"matrix must be at least 1x1, got {rows}x{cols}")
        if self.values.dtype != self.field.dtype:
            raise InvariantError(
                f"dtype {self.values.dtype} does not match field {self.field.value}"
            )
        if not np.all(np.isfinite(self.values)):
            raise InvariantError("matrix entries must be finite")
        self.values.setflags(write=False)

    @classmethod
    def from_array(cls, array: npt.ArrayLike, field: Field | str | None = None) -> MatrixF:
        """Build a matrix from anything numpy can turn into a 2-d array.

        Args:
            array: Nested sequence or ndarray of numbers.
            field: Target field. Inferred from the dtype when omitted.

        Returns:
            A validated, read-only matrix that owns a private copy of the data.

        Raises:
            InvariantError: If the data is not 2-d, is empty, holds non-finite
                entries, or has a nonzero imaginary part under the real field.
        """
        arr = np.array(array)
        if field is None:
            field = Field.COMPLEX if np.iscomplexobj(arr) else Field.REAL
        field = Field(field)
        if field is Field.REAL and np.iscomplexobj(arr):
            if np.any(arr.imag != 0):
                raise InvariantError("real-field matrix has a nonzero imaginary part")
            arr = arr.real
        try:
            arr = np.array(arr, dtype=field.dtype)
        except (TypeError, ValueError) as exc:
            raise InvariantError(f"entries are not numeric: {exc}") from exc
        return cls(values=arr, field=field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = Field.REAL) -> MatrixF:
        return cls(values=np.zeros((rows, cols), dtype=field.dtype), field=field)

    @classmethod
    def diag(cls, entries: npt.ArrayLike, field: Field | str | None = None) -> MatrixF:
        """Square diagonal matrix, e.g. `MatrixF.diag([1, 0])`."""
        return cls.from_array(np.diag(np.asarray(entries)), field)

    @property
    def rows(self) -> int:
        return int(self.values.shape[0])

    @property
    def cols(self) -> int:
        return int(self.values.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entries(self) -> list[Scalar]:
        """Row-major entries as scalars."""
        flat = self.values.ravel()
        if self.field is Field.REAL:
            return [Scalar(float(x)) for x in flat]
        return [Scalar(float(z.real), float(z.imag)) for z in flat]

    def to_array(self) -> Array:
        """Writable copy of the entries."""
        return np.array(self.values)

    def widen(self) -> MatrixF:
        """The same matrix viewed over the complex field."""
        if self.field is Field.COMPLEX:
            return self
        return MatrixF.from_array(self.values, Field.COMPLEX)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixF):
            return NotImplemented
        return self.field is other.field and np.array_equal(self.values, other.values)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MatrixF({self.rows}x{self.cols}, {self.field.value}, {self.values.tolist()!r})"


@dataclass(frozen=True)
class MatrixPair:
    """The pair (A, B) every bound is stated for.

    Both operands must share shape and field. Use `MatrixPair.promote` to
    pair a real matrix with a complex one.
    """

    a: MatrixF
    b: MatrixF

    def __post_init__(self) -> None:
        if self.a.shape != self.b.shape:
            raise DimensionError(
                f"shape mismatch: A is {self.a.rows}x{self.a.cols}, "
                f"B is {self.b.rows}x{self.b.cols}"
            )
        if self.a.field is not self.b.field:
            raise DimensionError(
                f"field mismatch: A is {self.a.field.value}, B is {self.b.field.value}"
            )

    @classmethod
    def promote(cls, a: MatrixF, b: MatrixF) -> MatrixPair:
        """Pair two matrices, widening a real operand when the other is complex."""
        if a.field is not b.field:
            a, b = a.widen(), b.widen()
        return cls(a, b)

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def field(self) -> Field:
        return self.a.field

    @property
    def min_dim(self) -> int:
        return min(self.a.shape)

    @property
    def is_square(self) -> bool:
        return self.a.is_square


def add(pair: MatrixPair) -> MatrixF:
    """Entrywise sum A + B."""
    return MatrixF(values=pair.a.values + pair.b.values, field=pair.field)


def negate(m: MatrixF) -> MatrixF:
    """Entrywise negation −M."""
    return MatrixF(values=-m.values, field=m.field)


def conjugate_transpose(m: MatrixF) -> MatrixF:
    """M⁺; the plain transpose over the reals."""
    return MatrixF(values=np.ascontiguousarray(m.values.conj().T), field=m.field)


def frobenius_norm(m: MatrixF) -> float:
    return float(np.linalg.norm(m.values, "fro"))

"""JSON interchange format for matrices.

Schema::

    {"rows": m, "cols": n, "field": "real" | "complex",
     "data": [[entry, ...], ...]}

A real-field entry is a JSON number; a complex-field entry is a two-element
array ``[re, im]``. Real-field entries may also be written as ``[re, 0]``.
Numbers round-trip bit for bit because the encoder writes the shortest
repr of each double.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, TypedDict

import numpy as np

from svineq.errors import (
    DataLengthError,
    ImaginaryPartError,
    MalformedJsonError,
    NonFiniteEntryError,
)
from svineq.matrix.core import Field, MatrixF, Scalar

logger = logging.getLogger(__name__)

Entry = float | list[float]


class MatrixRecord(TypedDict):
    """The JSON object a matrix serializes to."""

    rows: int
    cols: int
    field: str
    data: list[list[Entry]]


def _reject_constant(name: str) -> float:
    raise NonFiniteEntryError(f"non-finite literal {name} is not allowed")


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _positive_int(obj: dict[str, Any], key: str) -> int:
    value = obj.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise MalformedJsonError(f'"{key}" must be an integer >= 1, got {value!r}')
    return value


def _parse_entry(raw: Any, field: Field, row: int, col: int) -> Scalar:
    where = f"entry ({row}, {col})"
    try:
        if _is_number(raw):
            scalar = Scalar(float(raw))
        elif isinstance(raw, list) and len(raw) == 2 and all(_is_number(x) for x in raw):
            scalar = Scalar(float(raw[0]), float(raw[1]))
        else:
            raise MalformedJsonError(
                f"{where} must be a number or a [re, im] pair, got {raw!r}"
            )
    except OverflowError as exc:
        raise NonFiniteEntryError(f"{where} overflows a double") from exc

    if field is Field.COMPLEX and not isinstance(raw, list):
        raise MalformedJsonError(f"{where} must be a [re, im] pair in the complex field")
    if not scalar.is_finite:
        raise NonFiniteEntryError(f"{where} is not finite")
    if field is Field.REAL and scalar.im != 0:
        raise ImaginaryPartError(f"{where} has imaginary part {scalar.im} in the real field")
    return scalar


def parse_matrix(text: bytes | str) -> MatrixF:
    """Parse a matrix from its JSON text.

    Args:
        text: UTF-8 encoded JSON (bytes) or an already decoded string.

    Returns:
        The validated matrix.

    Raises:
        MalformedJsonError: Invalid JSON, invalid UTF-8 or schema violation.
        DataLengthError: `data` does not hold rows×cols entries.
        NonFiniteEntryError: An entry is NaN or infinite.
        ImaginaryPartError: Nonzero imaginary part under field=real.
    """
    try:
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        obj = json.loads(text, parse_constant=_reject_constant)
    except UnicodeDecodeError as exc:
        raise MalformedJsonError(f"matrix text is not UTF-8: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedJsonError(f"invalid JSON: {exc}") from exc

    if not isinstance(obj, dict):
        raise MalformedJsonError(f"expected a JSON object, got {type(obj).__name__}")

    rows = _positive_int(obj, "rows")
    cols = _positive_int(obj, "cols")
    try:
        field = Field(obj.get("field"))
    except ValueError as exc:
        raise MalformedJsonError(
            f'"field" must be "real" or "complex", got {obj.get("field")!r}'
        ) from exc

    data = obj.get("data")
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise MalformedJsonError('"data" must be an array of row arrays')
    if len(data) != rows or any(len(r) != cols for r in data):
        lengths = [len(r) for r in data]
        raise DataLengthError(
            f"expected {rows} rows of {cols} entries, got row lengths {lengths}"
        )

    scalars = [
        _parse_entry(raw, field, i, j) for i, row in enumerate(data) for j, raw in enumerate(row)
    ]
    if field is Field.REAL:
        values = np.array([s.re for s in scalars], dtype=np.float64)
    else:
        values = np.array([complex(s.re, s.im) for s in scalars], dtype=np.complex128)
    return MatrixF(values=values.reshape(rows, cols), field=field)


def to_record(m: MatrixF) -> MatrixRecord:
    """The JSON-ready object for a matrix."""
    entries = m.entries()
    data: list[list[Entry]] = []
    for start in range(0, len(entries), m.cols):
        row = entries[start : start + m.cols]
        if m.field is Field.REAL:
            data.append([s.re for s in row])
        else:
            data.append([[s.re, s.im] for s in row])
    return MatrixRecord(rows=m.rows, cols=m.cols, field=m.field.value, data=data)


def serialize_matrix(m: MatrixF) -> str:
    """Compact single-line JSON text for a matrix."""
    return json.dumps(to_record(m), separators=(",", ":"), allow_nan=False)


def load_matrix(path: Path | str) -> MatrixF:
    """Read and parse a matrix file.

    Raises:
        OSError: If the file cannot be read.
        ParseError: If its contents are not a valid matrix.
    """
    path = Path(path)
    logger.debug("Loading matrix from %s", path)
    return parse_matrix(path.read_bytes())

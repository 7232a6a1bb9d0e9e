"""Dense matrix value type and its JSON interchange format."""

from svineq.matrix.codec import (
    MatrixRecord,
    load_matrix,
    parse_matrix,
    serialize_matrix,
    to_record,
)
from svineq.matrix.core import (
    Field,
    MatrixF,
    MatrixPair,
    Scalar,
    add,
    conjugate_transpose,
    frobenius_norm,
    negate,
)

__all__ = [
    "Field",
    "MatrixF",
    "MatrixPair",
    "MatrixRecord",
    "Scalar",
    "add",
    "conjugate_transpose",
    "frobenius_norm",
    "load_matrix",
    "negate",
    "parse_matrix",
    "serialize_matrix",
    "to_record",
]

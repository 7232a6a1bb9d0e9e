"""Random matrix helpers for tests, independent of the search generators."""

import numpy as np

from svineq.matrix import Field, MatrixF, MatrixPair
from svineq.search import MatrixGenerator


def random_matrix(
    rng: np.random.Generator, rows: int, cols: int, field: Field = Field.REAL
) -> MatrixF:
    """Standard Gaussian test matrix."""
    values = rng.standard_normal((rows, cols))
    if field is Field.COMPLEX:
        values = values + 1j * rng.standard_normal((rows, cols))
    return MatrixF.from_array(values, field)


def random_pair(
    rng: np.random.Generator, rows: int, cols: int, field: Field = Field.REAL
) -> MatrixPair:
    return MatrixPair(random_matrix(rng, rows, cols, field), random_matrix(rng, rows, cols, field))


class ZeroOperandGenerator(MatrixGenerator):
    """Gaussian A paired with B = 0."""

    name = "zero_operand"

    def generate(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixF:
        return random_matrix(rng, rows, cols, field)

    def pair(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixPair:
        return MatrixPair(self.generate(rows, cols, field, rng), MatrixF.zeros(rows, cols, field))


class NotAGenerator:
    pass


class ToleranceScaleGenerator(MatrixGenerator):
    """Alternates a large pair that holds within tolerance and a small one that does not.

    For g3b_k1 the large pair has margin 5e-4 under a tolerance near 1e-3, the
    small pair a margin of 1e-4 under a tolerance near 1e-9.
    """

    name = "tolerance_scale"

    def generate(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixF:
        return MatrixF.diag([1.0, 0.0], field)

    def pair(
        self, rows: int, cols: int, field: Field, rng: np.random.Generator
    ) -> MatrixPair:
        if rng.integers(2) == 0:
            return MatrixPair(MatrixF.diag([1e6, 0.0], field), MatrixF.diag([-5e-4, 0.0], field))
        return MatrixPair(self.generate(rows, cols, field, rng), MatrixF.diag([-1e-4, 0.0], field))

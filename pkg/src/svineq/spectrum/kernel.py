"""Singular value kernels: LAPACK for production, one-sided Jacobi as an oracle."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
import scipy.linalg

from svineq.errors import InvariantError, NumericalError
from svineq.matrix import MatrixF, frobenius_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SingularSpectrum:
    """Singular values of one matrix, nonincreasing, length min(m, n).

    Values are never clamped: tiny singular values are kept as computed so
    that near-violations stay visible to the tolerance checks downstream.
    """

    values: npt.NDArray[np.float64]
    source_shape: tuple[int, int]

    def __post_init__(self) -> None:
        expected = min(self.source_shape)
        if self.values.shape != (expected,):
            raise InvariantError(
                f"spectrum of a {self.source_shape[0]}x{self.source_shape[1]} matrix "
                f"must have {expected} values, got shape {self.values.shape}"
            )
        if np.any(self.values < 0) or np.any(np.diff(self.values) > 0):
            raise InvariantError(
                f"singular values must be nonnegative and nonincreasing: {self.values}"
            )
        self.values.setflags(write=False)

    @classmethod
    def of(
        cls, values: npt.ArrayLike, source_shape: tuple[int, int] | None = None
    ) -> SingularSpectrum:
        """Build a spectrum from given values; the source shape defaults to n×n."""
        arr = np.array(values, dtype=np.float64)
        if source_shape is None:
            source_shape = (arr.shape[0], arr.shape[0])
        return cls(values=arr, source_shape=source_shape)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SingularSpectrum):
            return NotImplemented
        return self.source_shape == other.source_shape and np.array_equal(
            self.values, other.values
        )

    __hash__ = None  # type: ignore[assignment]


def singular_values(m: MatrixF) -> SingularSpectrum:
    """Backward-stable singular values of `m`, sorted nonincreasing.

    Uses LAPACK's divide-and-conquer driver and falls back to the QR-iteration
    driver when that fails to converge.

    Raises:
        NumericalError: If neither driver converges.
    """
    for driver in ("gesdd", "gesvd"):
        try:
            values = scipy.linalg.svd(
                m.values, compute_uv=False, check_finite=False, lapack_driver=driver
            )
            break
        except np.linalg.LinAlgError as exc:
            logger.warning(
                "SVD driver %s failed on %dx%d matrix: %s", driver, m.rows, m.cols, exc
            )
    else:
        raise NumericalError(f"SVD did not converge for a {m.rows}x{m.cols} matrix")
    return SingularSpectrum(values=np.asarray(values, dtype=np.float64), source_shape=m.shape)


def jacobi_singular_values(
    m: MatrixF, tol: float = 1e-14, max_sweeps: int = 60
) -> SingularSpectrum:
    """Singular values by one-sided (Hestenes) Jacobi rotations.

    Columns are rotated pairwise until they are mutually orthogonal; the
    singular values are then the column norms. Complex pairs are first
    phase-aligned so the real rotation applies. Slower than LAPACK, but
    shares no code with it, which makes it an independent check.

    Args:
        m: Input matrix, real or complex.
        tol: Relative orthogonality threshold for skipping a rotation.
        max_sweeps: Sweeps over all column pairs before giving up.

    Raises:
        NumericalError: If the columns are not orthogonal after max_sweeps.
    """
    work: npt.NDArray[Any] = np.array(m.values if m.rows >= m.cols else m.values.conj().T)
    n = work.shape[1]

    for sweep in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = float(np.vdot(work[:, p], work[:, p]).real)
                beta = float(np.vdot(work[:, q], work[:, q]).real)
                gamma = complex(np.vdot(work[:, p], work[:, q]))
                g = abs(gamma)
                if g == 0.0 or g <= tol * math.sqrt(alpha * beta):
                    continue
                rotated = True
                if np.iscomplexobj(work):
                    aligned = work[:, q] * (gamma / g).conjugate()
                else:
                    aligned = work[:, q] * math.copysign(1.0, gamma.real)
                zeta = (beta - alpha) / (2.0 * g)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = c * t
                col_p = work[:, p].copy()
                work[:, p] = c * col_p - s * aligned
                work[:, q] = s * col_p + c * aligned
        if not rotated:
            logger.debug("Jacobi converged after %d sweeps", sweep + 1)
            norms = np.sort(np.linalg.norm(work, axis=0))[::-1]
            return SingularSpectrum(values=np.ascontiguousarray(norms), source_shape=m.shape)

    raise NumericalError(f"one-sided Jacobi did not converge in {max_sweeps} sweeps")


def frobenius_residual(s: SingularSpectrum, m: MatrixF) -> float:
    """Relative gap between Σσ_i² and ‖m‖_F²; 0 for the zero matrix."""
    fro2 = frobenius_norm(m) ** 2
    sum2 = math.fsum((s.values**2).tolist())
    if fro2 == 0.0:
        return sum2
    return abs(sum2 - fro2) / fro2

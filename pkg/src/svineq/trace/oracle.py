"""Multistart alternating-polar oracle for trace extrema on the Stiefel manifold.

Maximizes f(U, V) = Re tr(U B V⁺) over U (k×m) and V (k×n) with orthonormal
rows. For fixed U the best V is the polar factor of U·B; for fixed V the best
U is the polar factor of V·B⁺. Each half-step is a closed-form Procrustes
solution, so f never decreases and every iterate is feasible.
"""

from __future__ import annotations

import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
import scipy.linalg

from svineq.errors import ConfigError, IndexRangeError, InvariantError, NumericalError
from svineq.matrix import Field, MatrixF, negate
from svineq.rng import Purpose, check_seed, stream
from svineq.trace.closed_form import TraceMode, closed_form

logger = logging.getLogger(__name__)

Array = npt.NDArray[Any]

SEMI_UNITARY_TOL = 1e-10


def semi_unitary_residual(x: Array) -> float:
    """‖X X⁺ − I‖_F."""
    k = x.shape[0]
    return float(np.linalg.norm(x @ x.conj().T - np.eye(k), "fro"))


@dataclass(frozen=True)
class SemiUnitaryPair:
    """U (k×m) and V (k×n) with U U⁺ = V V⁺ = I_k."""

    u: MatrixF
    v: MatrixF

    def __post_init__(self) -> None:
        if self.u.rows != self.v.rows:
            raise InvariantError(f"U has {self.u.rows} rows but V has {self.v.rows}")
        for name, x in (("U", self.u), ("V", self.v)):
            residual = semi_unitary_residual(x.values)
            if residual > SEMI_UNITARY_TOL:
                raise InvariantError(f"{name} is not semi-unitary: residual {residual:.3g}")

    @property
    def k(self) -> int:
        return self.u.rows


def _objective(u: Array, b: Array, v: Array) -> float:
    return float(np.real(np.trace(u @ b @ v.conj().T)))


def trace_objective(u: MatrixF, b: MatrixF, v: MatrixF) -> float:
    """Re tr(U B V⁺)."""
    return _objective(u.values, b.values, v.values)


def random_semi_unitary(k: int, n: int, field: Field, rng: np.random.Generator) -> Array:
    """k×n matrix with orthonormal rows, from orthonormalized Gaussian rows."""
    if field is Field.REAL:
        g: Array = rng.standard_normal((k, n))
    else:
        g = (rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n))) / math.sqrt(2.0)
    q, _ = scipy.linalg.qr(g.conj().T, mode="economic")
    return np.ascontiguousarray(q.conj().T)


def _polar_factor(a: Array) -> Array:
    factor, _ = scipy.linalg.polar(a)
    return np.asarray(factor)


@dataclass(frozen=True)
class OracleConfig:
    """Multistart settings.

    Attributes:
        seed: Root seed; restart r draws from stream (seed, RESTARTS, r).
        restarts: Number of random starts.
        max_iterations: Sweeps per restart before giving up on it.
        threshold: A restart converges once a sweep improves f by less.
        workers: Threads for running restarts; None runs them serially.
    """

    seed: int = 0
    restarts: int = 20
    max_iterations: int = 500
    threshold: float = 1e-12
    workers: int | None = None

    def __post_init__(self) -> None:
        check_seed(self.seed)
        if self.restarts < 1:
            raise ConfigError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_iterations < 1:
            raise ConfigError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not self.threshold > 0:
            raise ConfigError(f"threshold must be positive, got {self.threshold}")
        if self.workers is not None and self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class _Restart:
    index: int
    value: float
    u: Array
    v: Array
    iterations: int
    converged: bool


def _run_restart(b: MatrixF, k: int, cfg: OracleConfig, index: int) -> _Restart:
    rng = stream(cfg.seed, Purpose.RESTARTS, index)
    bv = b.values
    bh = bv.conj().T
    u = random_semi_unitary(k, b.rows, b.field, rng)
    v = _polar_factor(u @ bv)
    value = _objective(u, bv, v)

    for iteration in range(1, cfg.max_iterations + 1):
        u = _polar_factor(v @ bh)
        v = _polar_factor(u @ bv)
        new_value = _objective(u, bv, v)
        improvement = new_value - value
        value = new_value
        if improvement < cfg.threshold:
            logger.debug("Restart %d converged after %d sweeps: %.15g", index, iteration, value)
            return _Restart(index, value, u, v, iteration, True)

    logger.debug("Restart %d hit %d sweeps without converging", index, cfg.max_iterations)
    return _Restart(index, value, u, v, cfg.max_iterations, False)


@dataclass(frozen=True)
class TraceExtremumReport:
    """Closed form against the oracle for one (B, k, mode).

    Attributes:
        mode: Whether the extremum is a minimum or a maximum.
        k: Number of rows of U and V.
        closed_form: Proven extremum from the singular values of B.
        oracle_value: Best objective found by the oracle.
        oracle_pair: The (U, V) attaining oracle_value.
        iterations: Sweeps used by the winning restart.
        gap: |closed_form − oracle_value|.
        best_restart: Index of the winning restart.
        converged_restarts: How many restarts met the threshold.
    """

    mode: TraceMode
    k: int
    closed_form: float
    oracle_value: float
    oracle_pair: SemiUnitaryPair
    iterations: int
    gap: float
    best_restart: int
    converged_restarts: int

    def to_record(self) -> dict[str, object]:
        return {
            "mode": self.mode.value,
            "k": self.k,
            "closed_form": self.closed_form,
            "oracle_value": self.oracle_value,
            "gap": self.gap,
            "iterations": self.iterations,
            "best_restart": self.best_restart,
            "converged_restarts": self.converged_restarts,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))


def trace_oracle(
    b: MatrixF,
    k: int,
    mode: TraceMode | str = TraceMode.MAX,
    cfg: OracleConfig | None = None,
) -> TraceExtremumReport:
    """Certify the trace extremum numerically, independently of the closed form.

    mode=min runs the maximization on −B and negates the value; the returned
    pair attains the minimum on B itself.

    Args:
        b: The m×n matrix B.
        k: Rows of U and V, 1..min(m, n).
        mode: "min" or "max".
        cfg: Multistart settings.

    Returns:
        The best restart, ties broken by the lowest restart index, compared
        against the closed form.

    Raises:
        IndexRangeError: If k is out of range.
        NumericalError: If no restart converged; `best` carries the
            best-so-far report.
    """
    mode = TraceMode(mode)
    cfg = cfg or OracleConfig()
    if not 1 <= k <= min(b.shape):
        raise IndexRangeError(f"k must lie in 1..{min(b.shape)}, got {k}")

    target = b if mode is TraceMode.MAX else negate(b)
    if cfg.workers is None or cfg.workers == 1:
        outcomes = [_run_restart(target, k, cfg, r) for r in range(cfg.restarts)]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            outcomes = list(
                pool.map(lambda r: _run_restart(target, k, cfg, r), range(cfg.restarts))
            )

    best = outcomes[0]
    for outcome in outcomes[1:]:
        if outcome.value > best.value:
            best = outcome
    converged = sum(1 for o in outcomes if o.converged)

    oracle_value = best.value if mode is TraceMode.MAX else -best.value
    exact = closed_form(b, k, mode)
    pair = SemiUnitaryPair(
        u=MatrixF(values=best.u, field=b.field),
        v=MatrixF(values=best.v, field=b.field),
    )
    report = TraceExtremumReport(
        mode=mode,
        k=k,
        closed_form=exact,
        oracle_value=oracle_value,
        oracle_pair=pair,
        iterations=best.iterations,
        gap=abs(exact - oracle_value),
        best_restart=best.index,
        converged_restarts=converged,
    )
    if converged == 0:
        logger.warning("Trace oracle: none of %d restarts converged", cfg.restarts)
        raise NumericalError(
            f"trace oracle did not converge within {cfg.max_iterations} sweeps "
            f"on any of {cfg.restarts} restarts",
            best=report,
        )
    logger.debug(
        "Trace oracle %s k=%d: %.15g (gap %.3g)", mode.value, k, oracle_value, report.gap
    )
    return report

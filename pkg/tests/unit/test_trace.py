"""Unit tests for trace extrema: closed forms and the multistart oracle."""

import numpy as np
import pytest

from svineq.errors import (
    ConfigError,
    IndexRangeError,
    InvariantError,
    NumericalError,
    ShapeRuleError,
)
from svineq.matrix import Field, MatrixF
from svineq.rng import Purpose, stream
from svineq.trace import (
    OracleConfig,
    SemiUnitaryPair,
    TraceExtremumReport,
    TraceMode,
    claimed_min_trace,
    closed_form,
    max_trace_closed_form,
    min_trace_closed_form,
    random_semi_unitary,
    semi_unitary_residual,
    trace_objective,
    trace_oracle,
)
from tests.helpers import random_matrix


class TestClosedForms:
    """Extrema from the singular values of B."""

    def test_negated_diagonal(self):
        b = MatrixF.diag([-1.0, 0.0])
        assert min_trace_closed_form(b, 1) == -1.0
        assert max_trace_closed_form(b, 1) == 1.0
        assert claimed_min_trace(b, 1) == 0.0

    def test_zero_matrix(self):
        b = MatrixF.zeros(3, 3)
        for k in (1, 2, 3):
            assert closed_form(b, k, TraceMode.MIN) == 0.0
            assert closed_form(b, k, TraceMode.MAX) == 0.0
            assert claimed_min_trace(b, k) == 0.0

    def test_identity(self):
        b = MatrixF.from_array(np.eye(3))
        assert min_trace_closed_form(b, 2) == pytest.approx(-2.0)
        assert claimed_min_trace(b, 2) == pytest.approx(-2.0)

    def test_claimed_min_is_above_true_min(self, rng):
        b = random_matrix(rng, 4, 4)
        for k in (1, 2, 3):
            assert claimed_min_trace(b, k) > min_trace_closed_form(b, k)

    def test_claimed_min_requires_square(self):
        with pytest.raises(ShapeRuleError):
            claimed_min_trace(MatrixF.zeros(2, 3), 1)

    def test_k_out_of_range(self):
        with pytest.raises(IndexRangeError):
            max_trace_closed_form(MatrixF.zeros(2, 3), 3)


class TestSemiUnitary:
    """Random feasible points and the pair invariant."""

    @pytest.mark.parametrize("field", list(Field))
    def test_random_semi_unitary(self, field):
        x = random_semi_unitary(3, 5, field, stream(7, Purpose.RESTARTS, 0))
        assert x.shape == (3, 5)
        assert semi_unitary_residual(x) < 1e-12
        assert np.iscomplexobj(x) == (field is Field.COMPLEX)

    def test_pair_rejects_non_orthonormal_rows(self):
        with pytest.raises(InvariantError, match="semi-unitary"):
            SemiUnitaryPair(
                MatrixF.from_array([[1.0, 1.0]]), MatrixF.from_array([[1.0, 0.0]])
            )

    def test_pair_rejects_row_mismatch(self):
        with pytest.raises(InvariantError):
            SemiUnitaryPair(
                MatrixF.from_array(np.eye(2)), MatrixF.from_array([[1.0, 0.0, 0.0]])
            )

    def test_objective(self):
        u = MatrixF.from_array([[1.0, 0.0]])
        v = MatrixF.from_array([[0.0, 1.0]])
        b = MatrixF.from_array([[0.0, 3.0], [0.0, 0.0]])
        assert trace_objective(u, b, v) == 3.0


class TestTraceOracle:
    """The oracle certifies the closed forms numerically."""

    def test_min_on_negated_diagonal(self):
        b = MatrixF.diag([-1.0, 0.0])
        report = trace_oracle(b, 1, TraceMode.MIN, OracleConfig(seed=1))
        assert report.closed_form == -1.0
        assert report.oracle_value == pytest.approx(-1.0, abs=1e-10)
        assert report.gap < 1e-10

    def test_zero_matrix(self):
        report = trace_oracle(MatrixF.zeros(3, 3), 2, "min", OracleConfig(restarts=3))
        assert report.oracle_value == 0.0
        assert report.converged_restarts == 3

    @pytest.mark.parametrize("mode", list(TraceMode))
    def test_random_rectangular_complex(self, rng, mode):
        b = random_matrix(rng, 4, 6, Field.COMPLEX)
        report = trace_oracle(b, 2, mode, OracleConfig(seed=3))
        assert report.gap < 1e-6
        assert abs(report.oracle_value - closed_form(b, 2, mode)) < 1e-6

    def test_pair_is_feasible_and_attains_value(self, rng):
        b = random_matrix(rng, 5, 3, Field.REAL)
        report = trace_oracle(b, 2, TraceMode.MIN, OracleConfig(seed=5, restarts=5))
        pair = report.oracle_pair
        assert pair.k == 2
        assert pair.u.shape == (2, 5)
        assert pair.v.shape == (2, 3)
        assert semi_unitary_residual(pair.u.values) < 1e-10
        assert semi_unitary_residual(pair.v.values) < 1e-10
        assert trace_objective(pair.u, b, pair.v) == pytest.approx(
            report.oracle_value, abs=1e-12
        )

    def test_oracle_never_beats_closed_form(self, rng):
        b = random_matrix(rng, 4, 4, Field.COMPLEX)
        for k in (1, 2, 3, 4):
            report = trace_oracle(b, k, TraceMode.MAX, OracleConfig(restarts=4))
            assert report.oracle_value <= report.closed_form + 1e-10

    def test_threads_do_not_change_result(self, rng):
        b = random_matrix(rng, 4, 4, Field.COMPLEX)
        serial = trace_oracle(b, 2, TraceMode.MAX, OracleConfig(seed=11, restarts=8))
        pooled = trace_oracle(b, 2, TraceMode.MAX, OracleConfig(seed=11, restarts=8, workers=4))
        assert serial.to_json() == pooled.to_json()

    def test_non_convergence_carries_best(self, rng):
        b = random_matrix(rng, 6, 6, Field.COMPLEX)
        cfg = OracleConfig(restarts=3, max_iterations=1, threshold=1e-300)
        with pytest.raises(NumericalError) as info:
            trace_oracle(b, 2, TraceMode.MAX, cfg)
        best = info.value.best
        assert isinstance(best, TraceExtremumReport)
        assert best.converged_restarts == 0
        assert best.iterations == 1

    def test_k_out_of_range(self):
        with pytest.raises(IndexRangeError):
            trace_oracle(MatrixF.zeros(2, 2), 3)

    @pytest.mark.parametrize(
        "kwargs",
        [{"restarts": 0}, {"max_iterations": 0}, {"threshold": 0.0}, {"workers": 0}, {"seed": -1}],
    )
    def test_config_validation(self, kwargs):
        with pytest.raises(ConfigError):
            OracleConfig(**kwargs)

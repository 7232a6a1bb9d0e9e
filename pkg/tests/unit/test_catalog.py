"""Unit tests for the inequality catalog and the check driver."""

import json

import numpy as np
import pytest

from svineq.bounds import (
    CATALOG,
    CheckReport,
    IndexMode,
    ShapeRule,
    Status,
    TolerancePolicy,
    catalog_list,
    check,
    check_all,
    get_entry,
    legal_indices,
)
from svineq.errors import (
    ConfigError,
    IndexRangeError,
    ShapeRuleError,
    UnknownInequalityError,
)
from svineq.matrix import Field, MatrixF, MatrixPair
from tests.helpers import random_pair


class TestCatalogEntries:
    """Tests for the fixed catalog."""

    def test_six_entries_in_order(self):
        assert [e.id for e in catalog_list()] == [
            "g3b_sum",
            "g3b_k1",
            "thm813",
            "pointwise_corrected",
            "sum_corrected",
            "tight_sum",
        ]

    def test_statuses_and_shape_rules(self):
        by_id = {e.id: e for e in CATALOG}
        for refuted in ("g3b_sum", "g3b_k1", "thm813"):
            assert by_id[refuted].status is Status.CLAIMED_FALSE
            assert by_id[refuted].shape_rule is ShapeRule.SQUARE_ONLY
        for proven in ("pointwise_corrected", "sum_corrected", "tight_sum"):
            assert by_id[proven].status is Status.PROVEN
            assert by_id[proven].shape_rule is ShapeRule.SAME_SHAPE

    def test_index_modes(self):
        assert get_entry("g3b_sum").index_mode is IndexMode.PREFIX_SUM
        assert get_entry("thm813").index_mode is IndexMode.PER_INDEX
        assert get_entry("g3b_k1").fixed_index == 1

    def test_unknown_id(self):
        with pytest.raises(UnknownInequalityError, match="no_such"):
            get_entry("no_such")

    def test_record_is_json_serializable(self):
        record = json.loads(json.dumps(get_entry("tight_sum").to_record()))
        assert record["status"] == "proven"
        assert record["shape_rule"] == "same_shape"


class TestCounterexamplePair:
    """A = diag(1, 0), B = diag(-1, 0), so A + B = 0."""

    def test_g3b_k1_violated(self, eq3_pair):
        report = check("g3b_k1", eq3_pair, 1)
        assert report.lhs == 0.0
        assert report.rhs == 1.0
        assert report.margin == 1.0
        assert not report.holds

    def test_g3b_sum_violated_at_k1(self, eq3_pair):
        report = check("g3b_sum", eq3_pair, 1)
        assert report.margin == 1.0
        assert not report.holds

    def test_thm813_violated_at_i1(self, eq3_pair):
        report = check("thm813", eq3_pair, 1)
        assert (report.lhs, report.rhs, report.margin) == (0.0, 1.0, 1.0)
        assert not report.holds

    @pytest.mark.parametrize("k", [1, 2])
    def test_sum_corrected_holds_with_equality(self, eq3_pair, k):
        report = check("sum_corrected", eq3_pair, k)
        assert report.lhs == 0.0
        assert report.rhs == 0.0
        assert report.holds

    @pytest.mark.parametrize("ineq", ["pointwise_corrected", "tight_sum"])
    def test_proven_bounds_hold(self, eq3_pair, ineq):
        assert all(r.holds for r in check_all(ineq, eq3_pair))


class TestZeroOperand:
    """B = 0 turns every proven bound into an equality."""

    @pytest.mark.parametrize("ineq", ["pointwise_corrected", "sum_corrected", "tight_sum"])
    def test_margin_is_exactly_zero(self, rng, ineq):
        a = MatrixF.from_array(rng.standard_normal((3, 3)))
        pair = MatrixPair(a, MatrixF.zeros(3, 3))
        for report in check_all(ineq, pair):
            assert report.margin == 0.0
            assert report.holds


class TestCheckErrors:
    """Shape and index validation."""

    def test_square_only_rejects_rectangular(self):
        pair = MatrixPair(MatrixF.zeros(2, 3), MatrixF.zeros(2, 3))
        with pytest.raises(ShapeRuleError, match="square"):
            check("thm813", pair, 1)

    def test_same_shape_accepts_rectangular(self):
        pair = MatrixPair(MatrixF.zeros(2, 3), MatrixF.zeros(2, 3))
        assert [r.index for r in check_all("tight_sum", pair)] == [1, 2]

    @pytest.mark.parametrize("index", [0, 3, -1])
    def test_index_out_of_range(self, eq3_pair, index):
        with pytest.raises(IndexRangeError):
            check("sum_corrected", eq3_pair, index)

    def test_fixed_index_only(self, eq3_pair):
        assert list(legal_indices(get_entry("g3b_k1"), eq3_pair)) == [1]
        with pytest.raises(IndexRangeError):
            check("g3b_k1", eq3_pair, 2)

    def test_unknown_id_before_shape(self):
        pair = MatrixPair(MatrixF.zeros(2, 3), MatrixF.zeros(2, 3))
        with pytest.raises(UnknownInequalityError):
            check_all("nope", pair)


class TestTolerance:
    """Tests for the tolerance policy and the verdict."""

    def test_scales_with_frobenius_norms(self):
        pair = MatrixPair(MatrixF.from_array([[3.0, 4.0]]), MatrixF.from_array([[0.0, 0.0]]))
        assert TolerancePolicy(atol=1.0, rtol=0.5).tolerance(pair) == pytest.approx(3.5)

    @pytest.mark.parametrize("atol, rtol", [(-1.0, 0.0), (0.0, -1e-9), (float("nan"), 0.0)])
    def test_rejects_bad_values(self, atol, rtol):
        with pytest.raises(ConfigError):
            TolerancePolicy(atol=atol, rtol=rtol)

    def test_margin_at_tolerance_holds(self):
        assert CheckReport.from_sides("x", 1, lhs=0.0, rhs=0.5, tolerance=0.5).holds
        assert not CheckReport.from_sides("x", 1, lhs=0.0, rhs=0.5, tolerance=0.25).holds

    def test_verdict_compares_sides_not_rounded_margin(self):
        # rhs - tolerance rounds back to lhs; the margin itself is exact
        lhs, rhs, tolerance = 1e16, 1e16 + 4.0, 3.5
        report = CheckReport.from_sides("x", 1, lhs=lhs, rhs=rhs, tolerance=tolerance)
        assert report.margin == 4.0
        assert report.holds is (lhs >= rhs - tolerance)
        assert report.holds is True

    def test_zero_tolerance_still_reports_counterexample(self, eq3_pair):
        report = check("g3b_k1", eq3_pair, 1, TolerancePolicy(atol=0.0, rtol=0.0))
        assert report.tolerance == 0.0
        assert not report.holds


class TestReports:
    """Determinism and the JSON line format."""

    def test_deterministic(self, rng):
        pair = random_pair(rng, 4, 4, Field.COMPLEX)
        first = [r.to_json() for r in check_all("tight_sum", pair)]
        second = [r.to_json() for r in check_all("tight_sum", pair)]
        assert first == second

    def test_json_line_keys(self, eq3_pair):
        line = check("g3b_k1", eq3_pair, 1).to_json()
        assert "\n" not in line
        assert list(json.loads(line)) == ["ineq", "index", "lhs", "rhs", "margin", "tol", "holds"]
        assert json.loads(line)["holds"] is False

    def test_check_all_matches_single_checks(self, rng):
        pair = random_pair(rng, 3, 3, Field.REAL)
        every = check_all("pointwise_corrected", pair)
        single = [check("pointwise_corrected", pair, i) for i in (1, 2, 3)]
        assert every == single

    def test_proven_bounds_hold_on_random_pairs(self, rng):
        for _ in range(50):
            rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
            pair = random_pair(rng, rows, cols, Field.COMPLEX)
            for ineq in ("pointwise_corrected", "sum_corrected", "tight_sum"):
                assert all(r.holds for r in check_all(ineq, pair)), ineq

    def test_tight_sum_dominates_sum_corrected(self, rng):
        pair = random_pair(rng, 5, 5, Field.REAL)
        tight = check_all("tight_sum", pair)
        loose = check_all("sum_corrected", pair)
        for t, s in zip(tight, loose, strict=True):
            assert t.rhs >= s.rhs - 1e-12
            assert np.isclose(t.lhs, s.lhs)

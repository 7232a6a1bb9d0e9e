"""Unit tests for the chain verifier."""

import json

import numpy as np
import pytest

from svineq.bounds import tight_bound_diff, verify_chain
from svineq.errors import IndexRangeError
from svineq.matrix import Field, MatrixF, MatrixPair, load_matrix
from tests.helpers import random_pair


class TestVerifyChain:
    """Hand-computed chains and structural properties."""

    def test_counterexample_pair_is_all_zero(self, eq3_pair):
        report = verify_chain(eq3_pair, 1)
        assert report.quantities == (0.0, 0.0, 0.0, 0.0)
        assert report.holds

    def test_disjoint_supports(self):
        """σ(A) = (1, 0), σ(B) = (5, 0), σ(A+B) = (5, 1)."""
        pair = MatrixPair(MatrixF.diag([1.0, 0.0]), MatrixF.diag([0.0, 5.0]))
        report = verify_chain(pair, 1)
        assert report.quantities == (5.0, 4.0, 0.0, -4.0)
        assert report.abs_subset_max == 4.0
        assert report.abs_subset_matches
        assert all(link.holds for link in report.links)

    def test_zero_operand_collapses_chain(self, rng):
        a = MatrixF.from_array(rng.standard_normal((4, 4)))
        pair = MatrixPair(a, MatrixF.zeros(4, 4))
        for k in range(1, 5):
            q = verify_chain(pair, k).quantities
            assert q[0] == q[1] == q[2] == q[3]

    def test_golden_values(self, fixtures_dir):
        golden = json.loads((fixtures_dir / "chain_golden.json").read_text())
        pair = MatrixPair(
            load_matrix(fixtures_dir / golden["a"]), load_matrix(fixtures_dir / golden["b"])
        )
        for case in golden["chains"]:
            report = verify_chain(pair, case["k"])
            np.testing.assert_allclose(report.quantities, case["values"], atol=1e-12)
            assert report.abs_subset_max == pytest.approx(case["abs_subset_max"], abs=1e-12)
            assert report.holds

    @pytest.mark.parametrize("field", list(Field))
    def test_brute_force_agrees_exactly(self, rng, field):
        for n in range(1, 7):
            pair = random_pair(rng, n, n, field)
            for k in range(1, n + 1):
                fast = verify_chain(pair, k)
                slow = verify_chain(pair, k, brute_force=True)
                assert fast.quantities == slow.quantities
                assert fast.abs_subset_max == slow.abs_subset_max
                assert slow.holds

    def test_rectangular(self, rng):
        pair = random_pair(rng, 3, 5, Field.COMPLEX)
        for k in (1, 2, 3):
            assert verify_chain(pair, k).holds
        with pytest.raises(IndexRangeError):
            verify_chain(pair, 4)

    def test_k_zero_rejected(self, eq3_pair):
        with pytest.raises(IndexRangeError):
            verify_chain(eq3_pair, 0)

    def test_record_keys(self, eq3_pair):
        record = json.loads(verify_chain(eq3_pair, 2).to_json())
        assert record["k"] == 2
        assert len(record["values"]) == 4
        assert record["links"] == [True, True, True]
        assert record["abs_subset_equal"] is True
        assert record["holds"] is True


class TestTightBoundDiff:
    """The tight bound also lower-bounds the spectrum of A − B."""

    def test_counterexample_pair(self, eq3_pair):
        """A − B = diag(2, 0) while every |σ_i(A) − σ_i(B)| is zero."""
        lhs, rhs = tight_bound_diff(eq3_pair, 1)
        assert lhs == pytest.approx(2.0)
        assert rhs == 0.0

    def test_holds_on_random_pairs(self, rng):
        for _ in range(20):
            pair = random_pair(rng, 4, 3, Field.COMPLEX)
            for k in (1, 2, 3):
                lhs, rhs = tight_bound_diff(pair, k)
                assert lhs >= rhs - 1e-10

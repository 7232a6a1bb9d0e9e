"""Closed-form extrema of Re tr(U B V⁺) over semi-unitary U (k×m), V (k×n)."""

from enum import StrEnum

from svineq.errors import ShapeRuleError
from svineq.matrix import MatrixF
from svineq.spectrum import ky_fan_sum, singular_values, tail_sum


class TraceMode(StrEnum):
    MIN = "min"
    MAX = "max"


def max_trace_closed_form(b: MatrixF, k: int) -> float:
    """max Re tr(U B V⁺) = σ_1(B) + ... + σ_k(B).

    Raises:
        IndexRangeError: If k is not in 1..min(m, n).
    """
    return ky_fan_sum(singular_values(b), k)


def min_trace_closed_form(b: MatrixF, k: int) -> float:
    """min Re tr(U B V⁺) = −max Re tr(U(−B)V⁺) = −(σ_1(B) + ... + σ_k(B))."""
    return -max_trace_closed_form(b, k)


def claimed_min_trace(b: MatrixF, k: int) -> float:
    """The refuted minimum −(σ_{n−k+1}(B) + ... + σ_n(B)).

    This is not the minimum: whenever σ_k(B) > σ_n(B) it lies strictly above
    `min_trace_closed_form`. Kept so the discrepancy can be exhibited.

    Raises:
        ShapeRuleError: If b is not square.
        IndexRangeError: If k is not in 1..n.
    """
    if not b.is_square:
        raise ShapeRuleError(f"claimed minimum is stated for square B, got {b.rows}x{b.cols}")
    return -tail_sum(singular_values(b), k)


def closed_form(b: MatrixF, k: int, mode: TraceMode) -> float:
    if mode is TraceMode.MAX:
        return max_trace_closed_form(b, k)
    return min_trace_closed_form(b, k)

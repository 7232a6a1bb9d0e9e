"""The closed catalog of singular value lower bounds and its check driver."""

from __future__ import annotations

import json
import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import TypedDict

from svineq.bounds.tolerance import TolerancePolicy
from svineq.errors import IndexRangeError, ShapeRuleError, UnknownInequalityError
from svineq.matrix import MatrixPair, add
from svineq.spectrum import (
    AbsDiffSpectrum,
    SingularSpectrum,
    abs_diff_spectrum,
    ky_fan_sum,
    singular_values,
    tail_sum,
)

logger = logging.getLogger(__name__)


class Status(StrEnum):
    CLAIMED_FALSE = "claimed_false"
    PROVEN = "proven"


class IndexMode(StrEnum):
    PER_INDEX = "per_index"
    PREFIX_SUM = "prefix_sum"


class ShapeRule(StrEnum):
    SQUARE_ONLY = "square_only"
    SAME_SHAPE = "same_shape"


@dataclass(frozen=True)
class PairSpectra:
    """Spectra of A, B and A + B, computed once per pair."""

    a: SingularSpectrum
    b: SingularSpectrum
    total: SingularSpectrum

    @classmethod
    def compute(cls, pair: MatrixPair) -> PairSpectra:
        return cls(
            a=singular_values(pair.a),
            b=singular_values(pair.b),
            total=singular_values(add(pair)),
        )

    @property
    def n(self) -> int:
        return len(self.a)

    def abs_diff(self) -> AbsDiffSpectrum:
        return abs_diff_spectrum(self.a, self.b)


Evaluator = Callable[[PairSpectra, int], tuple[float, float]]


@dataclass(frozen=True)
class InequalityEntry:
    """One catalogued statement LHS ≥ RHS.

    Attributes:
        id: Unique identifier.
        status: Whether the statement is refuted or proven.
        index_mode: Per-index comparison of σ_i, or prefix sums up to k.
        shape_rule: square_only statements reject rectangular pairs.
        description: Human-readable form of the statement.
        evaluate: Maps (spectra, index) to (lhs, rhs).
        fixed_index: The only admissible index, for statements pinned to one.
    """

    id: str
    status: Status
    index_mode: IndexMode
    shape_rule: ShapeRule
    description: str
    evaluate: Evaluator
    fixed_index: int | None = None

    def to_record(self) -> dict[str, object]:
        return {
            "id": self.id,
            "status": self.status.value,
            "index_mode": self.index_mode.value,
            "shape_rule": self.shape_rule.value,
            "fixed_index": self.fixed_index,
            "description": self.description,
        }


def _g3b_sum(sp: PairSpectra, k: int) -> tuple[float, float]:
    return ky_fan_sum(sp.total, k), ky_fan_sum(sp.a, k) - tail_sum(sp.b, k)


def _g3b_k1(sp: PairSpectra, _: int) -> tuple[float, float]:
    return sp.total[0], sp.a[0] - sp.b[sp.n - 1]


def _thm813(sp: PairSpectra, i: int) -> tuple[float, float]:
    return sp.total[i - 1], sp.a[i - 1] + sp.b[sp.n - 1]


def _pointwise_corrected(sp: PairSpectra, i: int) -> tuple[float, float]:
    return sp.total[i - 1], sp.a[i - 1] - sp.b[0]


def _sum_corrected(sp: PairSpectra, k: int) -> tuple[float, float]:
    return ky_fan_sum(sp.total, k), ky_fan_sum(sp.a, k) - ky_fan_sum(sp.b, k)


def _tight_sum(sp: PairSpectra, k: int) -> tuple[float, float]:
    return ky_fan_sum(sp.total, k), sp.abs_diff().top_sum(k)


CATALOG: tuple[InequalityEntry, ...] = (
    InequalityEntry(
        id="g3b_sum",
        status=Status.CLAIMED_FALSE,
        index_mode=IndexMode.PREFIX_SUM,
        shape_rule=ShapeRule.SQUARE_ONLY,
        description=(
            "sum_{i<=k} s_i(A+B) >= sum_{i<=k} s_i(A) - sum_{i<=k} s_{n-i+1}(B); "
            "published as a majorization result, refuted by A=diag(1,0), B=diag(-1,0)"
        ),
        evaluate=_g3b_sum,
    ),
    InequalityEntry(
        id="g3b_k1",
        status=Status.CLAIMED_FALSE,
        index_mode=IndexMode.PER_INDEX,
        shape_rule=ShapeRule.SQUARE_ONLY,
        description="s_1(A+B) >= s_1(A) - s_n(B); the k=1 case of g3b_sum",
        evaluate=_g3b_k1,
        fixed_index=1,
    ),
    InequalityEntry(
        id="thm813",
        status=Status.CLAIMED_FALSE,
        index_mode=IndexMode.PER_INDEX,
        shape_rule=ShapeRule.SQUARE_ONLY,
        description=(
            "s_i(A+B) >= s_i(A) + s_n(B); published for unrestricted i, "
            "checked here over every i in 1..n"
        ),
        evaluate=_thm813,
    ),
    InequalityEntry(
        id="pointwise_corrected",
        status=Status.PROVEN,
        index_mode=IndexMode.PER_INDEX,
        shape_rule=ShapeRule.SAME_SHAPE,
        description="s_i(A+B) >= s_i(A) - s_1(B); the corrected form of thm813",
        evaluate=_pointwise_corrected,
    ),
    InequalityEntry(
        id="sum_corrected",
        status=Status.PROVEN,
        index_mode=IndexMode.PREFIX_SUM,
        shape_rule=ShapeRule.SAME_SHAPE,
        description=(
            "sum_{i<=k} s_i(A+B) >= sum_{i<=k} s_i(A) - sum_{i<=k} s_i(B); "
            "the corrected form of g3b_sum"
        ),
        evaluate=_sum_corrected,
    ),
    InequalityEntry(
        id="tight_sum",
        status=Status.PROVEN,
        index_mode=IndexMode.PREFIX_SUM,
        shape_rule=ShapeRule.SAME_SHAPE,
        description=(
            "sum_{i<=k} s_i(A+B) >= sum_{i<=k} d_[i] with d_i = |s_i(A) - s_i(B)| "
            "sorted nonincreasing; tighter than sum_corrected"
        ),
        evaluate=_tight_sum,
    ),
)

_BY_ID = {entry.id: entry for entry in CATALOG}


def catalog_list() -> list[InequalityEntry]:
    """All catalog entries in their fixed order."""
    return list(CATALOG)


def get_entry(inequality_id: str) -> InequalityEntry:
    """Look up an entry by id.

    Raises:
        UnknownInequalityError: If no entry has that id.
    """
    try:
        return _BY_ID[inequality_id]
    except KeyError:
        known = ", ".join(_BY_ID)
        raise UnknownInequalityError(
            f"unknown inequality {inequality_id!r}; known: {known}"
        ) from None


class CheckRecord(TypedDict):
    """One JSON line per evaluated (inequality, pair, index)."""

    ineq: str
    index: int
    lhs: float
    rhs: float
    margin: float
    tol: float
    holds: bool


@dataclass(frozen=True)
class CheckReport:
    """Outcome of evaluating one inequality at one index.

    margin = rhs − lhs. The bound holds when lhs ≥ rhs − tolerance, the same
    test the chain links use.
    """

    inequality_id: str
    index: int
    lhs: float
    rhs: float
    margin: float
    tolerance: float
    holds: bool

    @classmethod
    def from_sides(
        cls, inequality_id: str, index: int, lhs: float, rhs: float, tolerance: float
    ) -> CheckReport:
        margin = float(rhs - lhs)
        return cls(
            inequality_id=inequality_id,
            index=index,
            lhs=float(lhs),
            rhs=float(rhs),
            margin=margin,
            tolerance=float(tolerance),
            holds=float(lhs) >= float(rhs) - float(tolerance),
        )

    def to_record(self) -> CheckRecord:
        return CheckRecord(
            ineq=self.inequality_id,
            index=self.index,
            lhs=self.lhs,
            rhs=self.rhs,
            margin=self.margin,
            tol=self.tolerance,
            holds=self.holds,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))


def check_shape(entry: InequalityEntry, rows: int, cols: int) -> None:
    """Raise ShapeRuleError if a square-only entry meets a rectangular shape."""
    if entry.shape_rule is ShapeRule.SQUARE_ONLY and rows != cols:
        raise ShapeRuleError(
            f"{entry.id} is stated for square matrices only, got {rows}x{cols}"
        )


def legal_indices(entry: InequalityEntry, pair: MatrixPair) -> range:
    """Indices the entry admits for this pair."""
    check_shape(entry, *pair.shape)
    if entry.fixed_index is not None:
        return range(entry.fixed_index, entry.fixed_index + 1)
    return range(1, pair.min_dim + 1)


def evaluate(
    entry: InequalityEntry, spectra: PairSpectra, index: int, tolerance: float
) -> CheckReport:
    """Evaluate an entry on precomputed spectra. The index is not range-checked."""
    lhs, rhs = entry.evaluate(spectra, index)
    return CheckReport.from_sides(entry.id, index, lhs, rhs, tolerance)


def check_all(
    inequality_id: str,
    pair: MatrixPair,
    indices: Iterable[int] | None = None,
    tol_policy: TolerancePolicy | None = None,
) -> list[CheckReport]:
    """Evaluate an inequality at several indices from one decomposition of the pair.

    Args:
        inequality_id: Catalog id.
        pair: The matrices (A, B).
        indices: Indices to evaluate; every legal index when omitted.
        tol_policy: Tolerance policy; the default policy when omitted.

    Returns:
        One report per index, in the order given.

    Raises:
        UnknownInequalityError: If the id is not catalogued.
        ShapeRuleError: If a square-only entry receives a rectangular pair.
        IndexRangeError: If an index is not legal for the entry and pair.
        NumericalError: If a singular value computation fails.
    """
    entry = get_entry(inequality_id)
    legal = legal_indices(entry, pair)
    chosen: Sequence[int] = legal if indices is None else list(indices)
    for index in chosen:
        if index not in legal:
            raise IndexRangeError(
                f"index {index} is not legal for {entry.id} on a "
                f"{pair.shape[0]}x{pair.shape[1]} pair (legal: {legal.start}..{legal.stop - 1})"
            )
    tolerance = (tol_policy or TolerancePolicy()).tolerance(pair)
    spectra = PairSpectra.compute(pair)
    reports = [evaluate(entry, spectra, index, tolerance) for index in chosen]
    for report in reports:
        if not report.holds:
            logger.debug(
                "%s violated at index %d: margin %.3g", entry.id, report.index, report.margin
            )
    return reports


def check(
    inequality_id: str,
    pair: MatrixPair,
    index: int,
    tol_policy: TolerancePolicy | None = None,
) -> CheckReport:
    """Evaluate one inequality at one index. Errors as in `check_all`."""
    return check_all(inequality_id, pair, [index], tol_policy)[0]

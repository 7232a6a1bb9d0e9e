"""Randomized counterexample search with hill-climbing refinement."""

from __future__ import annotations

import json
import logging
import math
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from svineq.bounds import (
    CheckReport,
    InequalityEntry,
    TolerancePolicy,
    check_all,
    check_shape,
    get_entry,
)
from svineq.errors import ConfigError, IndexRangeError, InvariantError
from svineq.matrix import Field, MatrixF, MatrixPair, to_record
from svineq.rng import Purpose, check_seed, stream
from svineq.search.generators import MatrixGenerator, resolve_generator

logger = logging.getLogger(__name__)

REFINE_SCALE = 0.1


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one search run, validated on construction.

    Attributes:
        inequality_id: Catalog id to attack.
        rows: Rows of A and B.
        cols: Columns of A and B.
        field: Scalar field of the candidates.
        generator: Builtin generator name or "module.path:ClassName".
        trials: Number of candidate pairs to draw.
        seed: 64-bit unsigned root seed.
        refine_steps: Hill-climbing steps applied to the best candidate.
        index: Evaluate only this index; None scans every legal index.
        tol_policy: Tolerance policy for the verdicts.
        threads: Worker threads for trials; None runs serially.
    """

    inequality_id: str
    rows: int = 2
    cols: int = 2
    field: Field = Field.REAL
    generator: str = "dense_gaussian"
    trials: int = 1000
    seed: int = 0
    refine_steps: int = 0
    index: int | None = None
    tol_policy: TolerancePolicy = TolerancePolicy()
    threads: int | None = None

    def __post_init__(self) -> None:
        entry = get_entry(self.inequality_id)
        if self.rows < 1 or self.cols < 1:
            raise ConfigError(f"rows and cols must be >= 1, got {self.rows}x{self.cols}")
        check_shape(entry, self.rows, self.cols)
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.refine_steps < 0:
            raise ConfigError(f"refine_steps must be >= 0, got {self.refine_steps}")
        if self.threads is not None and self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")
        check_seed(self.seed)
        object.__setattr__(self, "field", Field(self.field))
        if self.index is not None:
            legal = self.legal_indices(entry)
            if self.index not in legal:
                raise IndexRangeError(
                    f"index {self.index} is not legal for {entry.id} on "
                    f"{self.rows}x{self.cols} (legal: {legal.start}..{legal.stop - 1})"
                )

    def legal_indices(self, entry: InequalityEntry) -> range:
        if entry.fixed_index is not None:
            return range(entry.fixed_index, entry.fixed_index + 1)
        return range(1, min(self.rows, self.cols) + 1)

    def indices(self) -> list[int] | None:
        return None if self.index is None else [self.index]


@dataclass(frozen=True)
class SearchResult:
    """Worst candidate found, with enough data to replay it.

    Attributes:
        found: True iff best_report is a violation.
        best_report: Worst report over all trials and indices: a violation if any,
            then the largest margin in excess of its tolerance.
        a: A of the worst pair.
        b: B of the worst pair.
        trials_used: Trials drawn.
        seed: Root seed of the run.
        inequality_id: The inequality searched.
        generator: Name of the generator used.
        best_trial: Trial that produced the worst pair before refinement.
        refine_accepted: Refinement steps that raised the rank of the worst report.
    """

    found: bool
    best_report: CheckReport
    a: MatrixF
    b: MatrixF
    trials_used: int
    seed: int
    inequality_id: str
    generator: str
    best_trial: int
    refine_accepted: int = 0

    def __post_init__(self) -> None:
        if self.found != (not self.best_report.holds):
            raise InvariantError("found must equal the negation of best_report.holds")

    @property
    def pair(self) -> MatrixPair:
        return MatrixPair(self.a, self.b)

    def to_record(self) -> dict[str, object]:
        return {
            "ineq": self.inequality_id,
            "found": self.found,
            "report": self.best_report.to_record(),
            "a": to_record(self.a),
            "b": to_record(self.b),
            "trials": self.trials_used,
            "seed": self.seed,
            "generator": self.generator,
            "best_trial": self.best_trial,
            "refine_accepted": self.refine_accepted,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"), allow_nan=False)


@dataclass(frozen=True)
class _Candidate:
    trial: int
    pair: MatrixPair
    report: CheckReport


def _rank(report: CheckReport) -> tuple[bool, float]:
    """Violations first, then by how far the margin exceeds the pair's own tolerance."""
    return (not report.holds, report.margin - report.tolerance)


def _worst(reports: Iterable[CheckReport]) -> CheckReport:
    """Highest rank; ties keep the earliest index."""
    best: CheckReport | None = None
    for report in reports:
        if best is None or _rank(report) > _rank(best):
            best = report
    assert best is not None
    return best


def _evaluate(cfg: SearchConfig, pair: MatrixPair) -> CheckReport:
    return _worst(check_all(cfg.inequality_id, pair, cfg.indices(), cfg.tol_policy))


def _run_trial(cfg: SearchConfig, generator: MatrixGenerator, trial: int) -> _Candidate:
    rng = stream(cfg.seed, Purpose.TRIALS, trial)
    pair = generator.pair(cfg.rows, cfg.cols, cfg.field, rng)
    return _Candidate(trial, pair, _evaluate(cfg, pair))


def _perturb(m: MatrixF, rng: np.random.Generator) -> MatrixF:
    """Move one uniformly chosen entry by Normal(0, 0.1·(1 + |entry|))."""
    values = m.to_array()
    r = int(rng.integers(m.rows))
    c = int(rng.integers(m.cols))
    scale = REFINE_SCALE * (1.0 + abs(values[r, c]))
    if m.field is Field.REAL:
        values[r, c] += rng.normal(0.0, scale)
    else:
        values[r, c] += complex(rng.normal(0.0, scale), rng.normal(0.0, scale)) / math.sqrt(2.0)
    return MatrixF(values=values, field=m.field)


def _refine(cfg: SearchConfig, start: _Candidate) -> tuple[_Candidate, int]:
    """Coordinate-wise random hill climbing on the margin in excess of tolerance.

    Each step perturbs one entry of A or B and keeps the move only if the
    worst report strictly outranks the current one, so a violation once
    found is never lost.

    Returns:
        The final candidate and the number of accepted steps.
    """
    rng = stream(cfg.seed, Purpose.REFINE)
    current = start
    accepted = 0
    for step in range(cfg.refine_steps):
        pair = current.pair
        if rng.integers(2) == 0:
            candidate = MatrixPair(_perturb(pair.a, rng), pair.b)
        else:
            candidate = MatrixPair(pair.a, _perturb(pair.b, rng))
        report = _evaluate(cfg, candidate)
        if _rank(report) > _rank(current.report):
            logger.debug(
                "Refine step %d: margin %.6g -> %.6g", step, current.report.margin, report.margin
            )
            current = _Candidate(current.trial, candidate, report)
            accepted += 1
    return current, accepted


def search(cfg: SearchConfig, generator: MatrixGenerator | None = None) -> SearchResult:
    """Hunt for a violation of one catalog inequality.

    Draws `cfg.trials` pairs, each from its own (seed, trial) stream, keeps the
    worst pair (violations first, then margin minus tolerance; ties go to the
    lowest trial index) and optionally refines it. The result does not depend
    on `cfg.threads`.

    Args:
        cfg: Validated search configuration.
        generator: Generator instance overriding `cfg.generator`.

    Raises:
        ConfigError: If the generator cannot be resolved.
        NumericalError: If a singular value computation fails.
    """
    gen = generator or resolve_generator(cfg.generator)
    gen_name = cfg.generator if generator is None else type(generator).name
    logger.info(
        "Searching %s: %d trials of %dx%d %s %s, seed %d",
        cfg.inequality_id, cfg.trials, cfg.rows, cfg.cols, cfg.field.value, gen_name, cfg.seed,
    )

    def run(trial: int) -> _Candidate:
        return _run_trial(cfg, gen, trial)

    if cfg.threads is None or cfg.threads == 1:
        candidates: Iterable[_Candidate] = map(run, range(cfg.trials))
        best = _merge(candidates)
    else:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            best = _merge(pool.map(run, range(cfg.trials)))

    accepted = 0
    if cfg.refine_steps > 0:
        best, accepted = _refine(cfg, best)

    found = not best.report.holds
    logger.info(
        "Search %s: found=%s, margin %.6g at index %d (trial %d)",
        cfg.inequality_id, found, best.report.margin, best.report.index, best.trial,
    )
    return SearchResult(
        found=found,
        best_report=best.report,
        a=best.pair.a,
        b=best.pair.b,
        trials_used=cfg.trials,
        seed=cfg.seed,
        inequality_id=cfg.inequality_id,
        generator=gen_name,
        best_trial=best.trial,
        refine_accepted=accepted,
    )


def _merge(candidates: Iterable[_Candidate]) -> _Candidate:
    best: _Candidate | None = None
    for candidate in candidates:
        if best is None or _rank(candidate.report) > _rank(best.report):
            best = candidate
        if candidate.trial % 1000 == 999:
            logger.debug("Trial %d: best margin so far %.6g", candidate.trial, best.report.margin)
    assert best is not None
    return best

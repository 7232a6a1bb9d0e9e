"""Command-line front end: catalog, check, chain, trace and search.

stdout carries JSON lines only; diagnostics and the optional --pretty
rendering go to stderr. The exit status is the pass/fail channel:

    0  every bound held / nothing found
    1  a violation was confirmed or found
    2  usage, configuration or parse error
    3  numerical failure
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from enum import IntEnum
from pathlib import Path
from typing import Any

from svineq.bounds import (
    DEFAULT_ATOL,
    DEFAULT_RTOL,
    CheckReport,
    TolerancePolicy,
    catalog_list,
    check_all,
    verify_chain,
)
from svineq.config import Settings
from svineq.errors import MalformedJsonError, NumericalError, SvineqError
from svineq.matrix import Field, MatrixPair, load_matrix, parse_matrix
from svineq.search import BUILTIN_GENERATORS, SearchConfig, search
from svineq.trace import (
    OracleConfig,
    TraceExtremumReport,
    TraceMode,
    claimed_min_trace,
    closed_form,
    trace_oracle,
)

logger = logging.getLogger("svineq")


class ExitStatus(IntEnum):
    OK = 0
    VIOLATION = 1
    USAGE = 2
    NUMERICAL = 3


def _emit(line: str) -> None:
    print(line, file=sys.stdout, flush=True)


def _pretty(args: argparse.Namespace, text: str) -> None:
    if args.pretty:
        print(text, file=sys.stderr)


def _tolerance(args: argparse.Namespace) -> TolerancePolicy:
    return TolerancePolicy(atol=args.atol, rtol=args.rtol)


def _render_report(report: CheckReport) -> str:
    verdict = "holds" if report.holds else "VIOLATED"
    return (
        f"{report.inequality_id:<20} index={report.index:<3} lhs={report.lhs:< 14.8g} "
        f"rhs={report.rhs:< 14.8g} margin={report.margin:< 12.4g} {verdict}"
    )


def cmd_catalog(args: argparse.Namespace, settings: Settings) -> ExitStatus:
    for entry in catalog_list():
        _emit(json.dumps(entry.to_record(), separators=(",", ":")))
        _pretty(args, f"{entry.id:<20} {entry.status.value:<14} {entry.description}")
    return ExitStatus.OK


def _load_replay(path: Path) -> tuple[str, MatrixPair, list[int]]:
    try:
        record: Any = json.loads(path.read_bytes())
        inequality_id = record["ineq"]
        index = int(record["report"]["index"])
        a = parse_matrix(json.dumps(record["a"]))
        b = parse_matrix(json.dumps(record["b"]))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise MalformedJsonError(f"{path} is not a search result: {exc}") from exc
    return inequality_id, MatrixPair.promote(a, b), [index]


def cmd_check(args: argparse.Namespace, settings: Settings) -> ExitStatus:
    if args.replay is not None:
        inequality_id, pair, indices = _load_replay(args.replay)
        index_list: list[int] | None = indices
    else:
        if args.ineq is None or args.A is None or args.B is None:
            raise SvineqError("check needs --ineq, --A and --B (or --replay)")
        inequality_id = args.ineq
        pair = MatrixPair.promote(load_matrix(args.A), load_matrix(args.B))
        index = args.k if args.k is not None else args.i
        index_list = None if index is None else [index]

    reports = check_all(inequality_id, pair, index_list, _tolerance(args))
    for report in reports:
        _emit(report.to_json())
        _pretty(args, _render_report(report))
    if all(report.holds for report in reports):
        return ExitStatus.OK
    return ExitStatus.VIOLATION


def cmd_chain(args: argparse.Namespace, settings: Settings) -> ExitStatus:
    pair = MatrixPair.promote(load_matrix(args.A), load_matrix(args.B))
    report = verify_chain(pair, args.k, _tolerance(args), brute_force=args.brute_force)
    _emit(report.to_json())
    _pretty(
        args,
        " >= ".join(f"{q:.10g}" for q in report.quantities)
        + f"  [{'holds' if report.holds else 'BROKEN'}]",
    )
    return ExitStatus.OK if report.holds else ExitStatus.VIOLATION


def cmd_trace(args: argparse.Namespace, settings: Settings) -> ExitStatus:
    b = load_matrix(args.B)
    mode = TraceMode(args.mode)
    value = closed_form(b, args.k, mode)
    record: dict[str, object] = {"mode": mode.value, "k": args.k, "closed_form": value}
    if mode is TraceMode.MIN and b.is_square:
        record["claimed_min"] = claimed_min_trace(b, args.k)

    if not args.oracle:
        _emit(json.dumps(record, separators=(",", ":")))
        _pretty(args, f"{mode.value} Re tr(U B V+) over k={args.k}: {value:.12g}")
        return ExitStatus.OK

    cfg = OracleConfig(
        seed=args.seed,
        restarts=args.restarts,
        max_iterations=args.max_iter,
        workers=settings.threads,
    )
    status = ExitStatus.OK
    try:
        report: TraceExtremumReport = trace_oracle(b, args.k, mode, cfg)
    except NumericalError as exc:
        if not isinstance(exc.best, TraceExtremumReport):
            raise
        logger.error("%s", exc.reason)
        report = exc.best
        status = ExitStatus.NUMERICAL
    record.update(report.to_record())
    _emit(json.dumps(record, separators=(",", ":")))
    _pretty(
        args,
        f"closed form {report.closed_form:.12g}, oracle {report.oracle_value:.12g}, "
        f"gap {report.gap:.3g} after {report.iterations} sweeps",
    )
    return status


def cmd_search(args: argparse.Namespace, settings: Settings) -> ExitStatus:
    cfg = SearchConfig(
        inequality_id=args.ineq,
        rows=args.rows,
        cols=args.cols,
        field=Field(args.field),
        generator=args.gen,
        trials=args.trials,
        seed=args.seed,
        refine_steps=args.refine,
        index=args.index,
        tol_policy=_tolerance(args),
        threads=args.threads or settings.threads,
    )
    result = search(cfg)
    _emit(result.to_json())
    _pretty(
        args,
        f"found={result.found} after {result.trials_used} trials; "
        + _render_report(result.best_report),
    )
    return ExitStatus.VIOLATION if result.found else ExitStatus.OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be in 0..2**64-1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="svineq",
        description="Check, refute and stress-test singular value inequalities for A + B.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    common.add_argument(
        "--pretty", action="store_true", help="human-readable rendering on stderr"
    )

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--atol", type=float, default=DEFAULT_ATOL)
    tol.add_argument("--rtol", type=float, default=DEFAULT_RTOL)

    p = sub.add_parser("catalog", parents=[common], help="list the catalogued inequalities")
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser(
        "check", parents=[common, tol], help="evaluate one inequality on (A, B)"
    )
    p.add_argument("--ineq", help="catalog id")
    p.add_argument("--A", type=Path, help="matrix A (JSON)")
    p.add_argument("--B", type=Path, help="matrix B (JSON)")
    p.add_argument("--replay", type=Path, help="search result JSON to re-check")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--k", type=_positive_int, help="prefix length for sum bounds")
    which.add_argument("--i", type=_positive_int, help="index for pointwise bounds")
    which.add_argument("--all", action="store_true", help="every legal index (default)")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("chain", parents=[common, tol], help="verify the chain of sum bounds")
    p.add_argument("--A", type=Path, required=True)
    p.add_argument("--B", type=Path, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--brute-force", action="store_true", help="enumerate all k-subsets")
    p.set_defaults(handler=cmd_chain)

    p = sub.add_parser("trace", parents=[common], help="trace extrema over semi-unitary U, V")
    p.add_argument("--B", type=Path, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--mode", choices=[m.value for m in TraceMode], default=TraceMode.MAX.value)
    p.add_argument("--oracle", action="store_true", help="certify with the multistart oracle")
    p.add_argument("--restarts", type=_positive_int, default=20)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--max-iter", type=_positive_int, default=500)
    p.set_defaults(handler=cmd_trace)

    p = sub.add_parser(
        "search", parents=[common, tol], help="randomized counterexample search"
    )
    p.add_argument("--ineq", required=True)
    p.add_argument("--rows", type=_positive_int, default=2)
    p.add_argument("--cols", type=_positive_int, default=2)
    p.add_argument("--field", choices=[f.value for f in Field], default=Field.REAL.value)
    p.add_argument(
        "--gen",
        default="dense_gaussian",
        help=f"one of {', '.join(BUILTIN_GENERATORS)} or module.path:ClassName",
    )
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--refine", type=int, default=0, help="hill-climbing steps")
    p.add_argument("--index", type=_positive_int, help="only this index (default: all)")
    p.add_argument("--threads", type=_positive_int, help="overrides SVINEQ_THREADS")
    p.set_defaults(handler=cmd_search)

    return parser


def _configure_logging(verbose: int, settings: Settings) -> None:
    if verbose >= 2:
        level: int | str = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = settings.log_level or logging.WARNING
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else ExitStatus.USAGE

    try:
        settings = Settings.from_env()
    except SvineqError as exc:
        print(f"svineq: {exc.reason}", file=sys.stderr)
        return ExitStatus.USAGE
    _configure_logging(args.verbose, settings)

    try:
        return int(args.handler(args, settings))
    except NumericalError as exc:
        print(f"svineq: numerical failure: {exc.reason}", file=sys.stderr)
        return ExitStatus.NUMERICAL
    except SvineqError as exc:
        print(f"svineq: {exc.reason}", file=sys.stderr)
        return ExitStatus.USAGE
    except OSError as exc:
        print(f"svineq: {exc}", file=sys.stderr)
        return ExitStatus.USAGE


if __name__ == "__main__":
    sys.exit(main())

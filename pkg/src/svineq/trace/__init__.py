"""Trace extrema over semi-unitary matrices: closed forms and a multistart oracle."""

from svineq.trace.closed_form import (
    TraceMode,
    claimed_min_trace,
    closed_form,
    max_trace_closed_form,
    min_trace_closed_form,
)
from svineq.trace.oracle import (
    OracleConfig,
    SemiUnitaryPair,
    TraceExtremumReport,
    random_semi_unitary,
    semi_unitary_residual,
    trace_objective,
    trace_oracle,
)

__all__ = [
    "OracleConfig",
    "SemiUnitaryPair",
    "TraceExtremumReport",
    "TraceMode",
    "claimed_min_trace",
    "closed_form",
    "max_trace_closed_form",
    "min_trace_closed_form",
    "random_semi_unitary",
    "semi_unitary_residual",
    "trace_objective",
    "trace_oracle",
]

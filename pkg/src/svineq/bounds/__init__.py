"""Catalog of singular value lower bounds, tolerance policy and chain verifier."""

from svineq.bounds.catalog import (
    CATALOG,
    CheckRecord,
    CheckReport,
    IndexMode,
    InequalityEntry,
    PairSpectra,
    ShapeRule,
    Status,
    catalog_list,
    check,
    check_all,
    check_shape,
    evaluate,
    get_entry,
    legal_indices,
)
from svineq.bounds.chain import ChainLink, ChainReport, tight_bound_diff, verify_chain
from svineq.bounds.tolerance import DEFAULT_ATOL, DEFAULT_RTOL, TolerancePolicy

__all__ = [
    "CATALOG",
    "DEFAULT_ATOL",
    "DEFAULT_RTOL",
    "ChainLink",
    "ChainReport",
    "CheckRecord",
    "CheckReport",
    "IndexMode",
    "InequalityEntry",
    "PairSpectra",
    "ShapeRule",
    "Status",
    "TolerancePolicy",
    "catalog_list",
    "check",
    "check_all",
    "check_shape",
    "evaluate",
    "get_entry",
    "legal_indices",
    "tight_bound_diff",
    "verify_chain",
]

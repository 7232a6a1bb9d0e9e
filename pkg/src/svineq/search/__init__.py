"""Randomized search for counterexamples to catalog inequalities."""

from svineq.search.driver import SearchConfig, SearchResult, search
from svineq.search.generators import (
    BUILTIN_GENERATORS,
    DenseGaussian,
    DiagonalGaussian,
    DiagonalInteger,
    MatrixGenerator,
    resolve_generator,
)

__all__ = [
    "BUILTIN_GENERATORS",
    "DenseGaussian",
    "DiagonalGaussian",
    "DiagonalInteger",
    "MatrixGenerator",
    "SearchConfig",
    "SearchResult",
    "resolve_generator",
    "search",
]

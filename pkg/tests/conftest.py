"""Shared pytest fixtures."""

from pathlib import Path

import numpy as np
import pytest

from svineq.matrix import MatrixF, MatrixPair

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def eq3_pair() -> MatrixPair:
    """A = diag(1, 0), B = diag(-1, 0): the standard counterexample pair."""
    return MatrixPair(MatrixF.diag([1.0, 0.0]), MatrixF.diag([-1.0, 0.0]))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)

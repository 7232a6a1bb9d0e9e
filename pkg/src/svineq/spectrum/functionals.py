"""Prefix, tail and subset sums over singular spectra.

All sums go through `math.fsum`, which rounds the exact sum once. Two sums
of the same multiset therefore agree bit for bit whatever the order, which
is what lets the sorted subset maximum equal a brute-force enumeration
exactly.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from svineq.errors import DimensionError, IndexRangeError, InvariantError
from svineq.spectrum.kernel import SingularSpectrum


def _check_k(k: int, length: int) -> None:
    if not 1 <= k <= length:
        raise IndexRangeError(f"k must lie in 1..{length}, got {k}")


def ky_fan_sum(s: SingularSpectrum, k: int) -> float:
    """σ_1 + ... + σ_k, the sum of the k largest singular values."""
    _check_k(k, len(s))
    return math.fsum(s.values[:k].tolist())


def tail_sum(s: SingularSpectrum, k: int) -> float:
    """σ_{n-k+1} + ... + σ_n, the sum of the k smallest singular values."""
    _check_k(k, len(s))
    return math.fsum(s.values[len(s) - k :].tolist())


@dataclass(frozen=True, eq=False)
class AbsDiffSpectrum:
    """s_i = |σ_i(A) − σ_i(B)| in index order and sorted nonincreasing.

    `order` holds the original index of each sorted entry; ties keep the
    lower index first.
    """

    raw: npt.NDArray[np.float64]
    sorted: npt.NDArray[np.float64]
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if not np.array_equal(self.raw[list(self.order)], self.sorted):
            raise InvariantError("sorted is not the stated permutation of raw")
        if np.any(self.raw < 0) or np.any(np.diff(self.sorted) > 0):
            raise InvariantError("abs-diff entries must be nonnegative and sorted nonincreasing")
        self.raw.setflags(write=False)
        self.sorted.setflags(write=False)

    def __len__(self) -> int:
        return int(self.raw.shape[0])

    def top_sum(self, k: int) -> float:
        """s_[1] + ... + s_[k]."""
        _check_k(k, len(self))
        return math.fsum(self.sorted[:k].tolist())


def abs_diff_spectrum(a: SingularSpectrum, b: SingularSpectrum) -> AbsDiffSpectrum:
    """Pairwise |σ_i(a) − σ_i(b)| with a deterministic nonincreasing sort.

    Raises:
        DimensionError: If the spectra have different lengths.
    """
    if len(a) != len(b):
        raise DimensionError(f"spectra lengths differ: {len(a)} vs {len(b)}")
    raw = np.abs(a.values - b.values)
    order = sorted(range(len(raw)), key=lambda i: (-raw[i], i))
    return AbsDiffSpectrum(raw=raw, sorted=raw[order], order=tuple(order))


def max_subset_sum(
    values: Sequence[float] | npt.ArrayLike, k: int, brute_force: bool = False
) -> float:
    """Maximum over index sets i_1 < ... < i_k of the subset sum.

    The default path sorts and takes the top k. With `brute_force=True`
    every k-subset is enumerated; that is exponential and meant only as a
    cross-check on short vectors.
    """
    vals = [float(v) for v in np.asarray(values, dtype=np.float64).ravel()]
    _check_k(k, len(vals))
    if not brute_force:
        return math.fsum(sorted(vals, reverse=True)[:k])
    return max(math.fsum(subset) for subset in itertools.combinations(vals, k))

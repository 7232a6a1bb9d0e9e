"""Verifier for the chain of lower bounds on Ky Fan sums of A + B.

For 1 ≤ k ≤ min(m, n) the chain reads

    Σ_{i≤k} σ_i(A+B)
      ≥ Σ_{i≤k} s_[i]                        (s_i = |σ_i(A) − σ_i(B)|, sorted)
      ≥ max_{|I|=k} Σ_{i∈I} (σ_i(A) − σ_i(B))
      ≥ Σ_{i≤k} (σ_i(A) − σ_i(B))

and the second line is also max_{|I|=k} Σ_{i∈I} s_i. The verifier
evaluates all four quantities, each adjacent link with tolerance, and the
equality of the sorted sum with the absolute subset maximum.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from svineq.bounds.catalog import PairSpectra
from svineq.bounds.tolerance import TolerancePolicy
from svineq.errors import IndexRangeError
from svineq.matrix import MatrixPair, add, negate
from svineq.spectrum import abs_diff_spectrum, ky_fan_sum, max_subset_sum, singular_values


@dataclass(frozen=True)
class ChainLink:
    left: float
    right: float
    holds: bool


@dataclass(frozen=True)
class ChainReport:
    """The chain quantities for one pair and one k, with verdicts.

    Attributes:
        k: Prefix length.
        quantities: Σσ_i(A+B), Σs_[i], signed subset maximum, Σ(σ_i(A) − σ_i(B)).
        links: Verdicts for quantities[j] ≥ quantities[j+1].
        abs_subset_max: Maximum over k-subsets of Σ s_i.
        abs_subset_matches: Whether abs_subset_max equals quantities[1] exactly.
        tolerance: Slack used for every link.
    """

    k: int
    quantities: tuple[float, float, float, float]
    links: tuple[ChainLink, ChainLink, ChainLink]
    abs_subset_max: float
    abs_subset_matches: bool
    tolerance: float

    @property
    def holds(self) -> bool:
        return self.abs_subset_matches and all(link.holds for link in self.links)

    def to_record(self) -> dict[str, object]:
        return {
            "k": self.k,
            "values": list(self.quantities),
            "links": [link.holds for link in self.links],
            "abs_subset_max": self.abs_subset_max,
            "abs_subset_equal": self.abs_subset_matches,
            "tol": self.tolerance,
            "holds": self.holds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))


def _check_chain_args(pair: MatrixPair, k: int) -> None:
    if not 1 <= k <= pair.min_dim:
        raise IndexRangeError(f"k must lie in 1..{pair.min_dim}, got {k}")


def verify_chain(
    pair: MatrixPair,
    k: int,
    tol_policy: TolerancePolicy | None = None,
    brute_force: bool = False,
) -> ChainReport:
    """Evaluate the chain for (A, B) at prefix length k.

    Args:
        pair: Same-shape matrices; rectangular pairs are allowed.
        k: Prefix length, 1..min(m, n).
        tol_policy: Tolerance policy for the three links.
        brute_force: Compute both subset maxima by enumerating every k-subset
            instead of sorting.

    Raises:
        IndexRangeError: If k is out of range.
        NumericalError: If a singular value computation fails.
    """
    _check_chain_args(pair, k)
    tolerance = (tol_policy or TolerancePolicy()).tolerance(pair)
    sp = PairSpectra.compute(pair)
    diffs = sp.abs_diff()
    signed = (sp.a.values - sp.b.values).tolist()

    quantities = (
        ky_fan_sum(sp.total, k),
        diffs.top_sum(k),
        max_subset_sum(signed, k, brute_force=brute_force),
        math.fsum(signed[:k]),
    )
    links = (
        ChainLink(quantities[0], quantities[1], quantities[0] >= quantities[1] - tolerance),
        ChainLink(quantities[1], quantities[2], quantities[1] >= quantities[2] - tolerance),
        ChainLink(quantities[2], quantities[3], quantities[2] >= quantities[3] - tolerance),
    )
    abs_max = max_subset_sum(diffs.raw, k, brute_force=brute_force)
    return ChainReport(
        k=k,
        quantities=quantities,
        links=links,
        abs_subset_max=abs_max,
        abs_subset_matches=abs_max == quantities[1],
        tolerance=tolerance,
    )


def tight_bound_diff(pair: MatrixPair, k: int) -> tuple[float, float]:
    """(Σ_{i≤k} σ_i(A − B), Σ_{i≤k} s_[i]); the first is never below the second.

    Raises:
        IndexRangeError: If k is out of range.
    """
    _check_chain_args(pair, k)
    difference = add(MatrixPair(pair.a, negate(pair.b)))
    diffs = abs_diff_spectrum(singular_values(pair.a), singular_values(pair.b))
    return ky_fan_sum(singular_values(difference), k), diffs.top_sum(k)

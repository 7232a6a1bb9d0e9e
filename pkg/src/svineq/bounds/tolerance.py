"""Scale-aware slack for floating-point verdicts."""

from dataclasses import dataclass

from svineq.errors import ConfigError
from svineq.matrix import MatrixPair, frobenius_norm

DEFAULT_ATOL = 1e-10
DEFAULT_RTOL = 1e-9


@dataclass(frozen=True)
class TolerancePolicy:
    """tolerance = atol + rtol·(‖A‖_F + ‖B‖_F).

    A lower bound "holds" iff lhs ≥ rhs − tolerance.
    """

    atol: float = DEFAULT_ATOL
    rtol: float = DEFAULT_RTOL

    def __post_init__(self) -> None:
        if not (self.atol >= 0 and self.rtol >= 0):
            raise ConfigError(f"atol and rtol must be nonnegative, got {self.atol}, {self.rtol}")

    def tolerance(self, pair: MatrixPair) -> float:
        return self.atol + self.rtol * (frobenius_norm(pair.a) + frobenius_norm(pair.b))

"""Singular values and the Ky Fan, tail and subset-sum functionals built on them."""

from svineq.spectrum.functionals import (
    AbsDiffSpectrum,
    abs_diff_spectrum,
    ky_fan_sum,
    max_subset_sum,
    tail_sum,
)
from svineq.spectrum.kernel import (
    SingularSpectrum,
    frobenius_residual,
    jacobi_singular_values,
    singular_values,
)

__all__ = [
    "AbsDiffSpectrum",
    "SingularSpectrum",
    "abs_diff_spectrum",
    "frobenius_residual",
    "jacobi_singular_values",
    "ky_fan_sum",
    "max_subset_sum",
    "singular_values",
    "tail_sum",
]

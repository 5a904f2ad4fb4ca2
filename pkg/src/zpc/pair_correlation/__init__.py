"""Pair correlation subpackage: weight w_β, F_β(x, T) by direct and integral methods, integral identity."""

from __future__ import annotations

from . import constants
from .direct import (FEvaluation, PairKernel, check_arguments, f_direct,
                     f_direct_many, f_direct_prefix, normalized_f,
                     trivial_bound_ratio)
from .integral import f_integral
from .lemma2 import lemma2_rhs, theorem2_split
from .weight import (WeightKernel, weight, weight_fourier_check,
                     weight_identity_residual)

__all__ = [
    "constants",
    "FEvaluation",
    "PairKernel",
    "check_arguments",
    "f_direct",
    "f_direct_prefix",
    "f_direct_many",
    "normalized_f",
    "trivial_bound_ratio",
    "f_integral",
    "lemma2_rhs",
    "theorem2_split",
    "weight",
    "WeightKernel",
    "weight_fourier_check",
    "weight_identity_residual",
]

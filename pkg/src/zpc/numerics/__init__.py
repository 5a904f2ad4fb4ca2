"""Numerics subpackage: compensated sums, phase reduction modulo 2π, Gauss quadrature."""

from __future__ import annotations

from . import constants
from .phase import reduce_phase, unit_phasors
from .quadrature import (QuadratureResult, gauss_doubling, gauss_integrate,
                         gauss_nodes)
from .summation import (KahanSum, complex_kahan_sum, compensated_cumsum,
                        pairwise_kahan_sum, two_prod, two_sum)

__all__ = [
    "constants",
    "reduce_phase",
    "unit_phasors",
    "QuadratureResult",
    "gauss_nodes",
    "gauss_integrate",
    "gauss_doubling",
    "KahanSum",
    "pairwise_kahan_sum",
    "complex_kahan_sum",
    "compensated_cumsum",
    "two_sum",
    "two_prod",
]

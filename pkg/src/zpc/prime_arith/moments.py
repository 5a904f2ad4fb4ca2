"""
Second moment of primes in short intervals:

    J(x, h) = ∫_0^x (ψ(t + h) − ψ(t) − h)² dt

The integrand is constant between consecutive points of {n, n − h : n ∈ ℤ},
so the integral is an exact finite sum over those pieces.
"""

from __future__ import annotations

import math

import numpy as np

from src.zpc.errors import RangeError
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.summation import pairwise_kahan_sum

from .sieve import LambdaTable

log = get_logger(__name__)


def j_second_moment(x: float, h: float, table: LambdaTable) -> float:
    """
    Exact J(x, h) for 1 <= h <= x <= n_max − h.

    Raises:
        RangeError: parameters outside that range
    """
    x, h = float(x), float(h)
    if not (1.0 <= h <= x <= table.n_max - h):
        raise RangeError(f"J(x, h) needs 1 <= h <= x <= n_max - h, got x={x!r}, h={h!r}")

    integers = np.arange(0, math.floor(x) + 1, dtype=np.float64)
    shifted = np.arange(math.ceil(h), math.floor(x + h) + 1, dtype=np.float64) - h
    cuts = np.unique(np.concatenate(([0.0, x], integers, shifted)))
    cuts = cuts[(cuts >= 0.0) & (cuts <= x)]

    widths = np.diff(cuts)
    mids = 0.5 * (cuts[:-1] + cuts[1:])
    upper = table.psi_prefix[np.floor(mids + h).astype(np.int64)]
    lower = table.psi_prefix[np.floor(mids).astype(np.int64)]
    values = upper - lower - h
    total = pairwise_kahan_sum(widths * values * values)
    log.debug("J(%g, %g) over %d pieces = %.6e", x, h, widths.size, total)
    return total


def j_ratio(x: float, h: float, table: LambdaTable) -> float:
    """J(x, h) / (h·x·log x)."""
    return j_second_moment(x, h, table) / (h * x * math.log(x))


__all__ = ["j_second_moment", "j_ratio"]

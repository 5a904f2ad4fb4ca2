"""
Zero counting: N(T) from a ZeroSet, the Riemann–von Mangoldt main term, and
the unit-interval density report.
"""

from __future__ import annotations

import math

import numpy as np

from src.zpc.errors import DomainError
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.constants import TWO_PI
from src.zpc.report import ScanReport

from .constants import (COMPLETENESS_C, DENSITY_T_MIN, N_FORMULA_OFFSET,
                        T_MAX_MIN)
from .zero_set import ZeroSet

log = get_logger(__name__)


def n_of_t(zs: ZeroSet, T):
    """Count of ordinates γ <= T; raises HeightExceededError above t_max."""
    return zs.n_of_t(T)


def n_formula(T):
    """
    Smooth main term (T/2π)·log(T/2π) − T/2π of N(T), without error term.

    Raises:
        DomainError: if T < 3
    """
    arr = np.asarray(T, dtype=np.float64)
    if arr.size and float(arr.min()) < 3.0:
        raise DomainError(f"n_formula needs T >= 3, got {float(arr.min())!r}")
    u = arr / TWO_PI
    value = u * np.log(u) - u
    return float(value) if arr.ndim == 0 else value


def completeness_offenders(gammas: np.ndarray, heights: np.ndarray) -> np.ndarray:
    """
    Heights T at which |N(T) − (n_formula(T) + 7/8)| exceeds 2·log T.
    """
    counts = np.searchsorted(gammas, heights, side="right")
    drift = np.abs(counts - (n_formula(heights) + N_FORMULA_OFFSET))
    return heights[drift > COMPLETENESS_C * np.log(heights)]


def density_report(zs: ZeroSet) -> ScanReport:
    """
    Rows (T, N(T+1) − N(T), log T, ratio) for integer T from 19 while T + 1 <= t_max.

    The maximum ratio and where it occurs are recorded in the metadata.
    """
    if zs.t_max < T_MAX_MIN:
        raise DomainError(f"density report needs t_max >= {T_MAX_MIN}, got {zs.t_max!r}")
    heights = np.arange(DENSITY_T_MIN, math.floor(zs.t_max), dtype=np.float64)
    counts = np.diff(zs.n_of_t(np.append(heights, heights[-1] + 1.0)))
    logs = np.log(heights)
    ratios = counts / logs
    rows = [
        {"T": int(T), "count": int(c), "log_T": float(lt), "ratio": float(r), "t_max": zs.t_max}
        for T, c, lt, r in zip(heights, counts, logs, ratios)
    ]
    report = ScanReport("density", rows, metadata={"zeros": zs.provenance()})
    top = int(np.argmax(ratios))
    report.record(max_ratio=float(ratios[top]), max_ratio_T=int(heights[top]))
    log.info("Density report: %d rows, max ratio %.4f at T=%d", len(rows), ratios[top], heights[top])
    return report


__all__ = ["n_of_t", "n_formula", "completeness_offenders", "density_report"]

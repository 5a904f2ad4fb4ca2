"""
Empirical statistics for the two pair correlation conjectures.

Conjecture 1 bounds F_β(x, T) by T·𝓛(T); Conjecture 2 replaces β by the
oscillation of F along x:

    stat(x, T) = max_{1/(2 log T) <= v <= 2 log T} |F(xv, T) − F(x, T)|.

Only observed values are reported.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable

import numpy as np

from src.zpc.errors import DomainError, EmptyGridError, HeightExceededError
from src.zpc.logging_setup import get_logger
from src.zpc.pair_correlation import f_direct, f_direct_many
from src.zpc.pair_correlation.constants import LOG_X_CAP, T_MIN
from src.zpc.report import ScanReport
from src.zpc.zeta_zeros import ZeroSet

from .constants import DEFAULT_V_SAMPLES, V_SAMPLES_MIN
from .schedules import BetaSchedule, EllSchedule, WindowSchedule

log = get_logger(__name__)


def v_grid(T: float, v_samples: int) -> np.ndarray:
    """
    log v on [−log(2 log T), log(2 log T)]: v_samples equal intervals plus
    v = 1; doubling v_samples gives a superset.
    """
    edge = math.log(2.0 * math.log(T))
    return np.union1d(np.linspace(-edge, edge, v_samples + 1), [0.0])


def conjecture2_stat(zs: ZeroSet, x: float, T: float, v_samples: int = DEFAULT_V_SAMPLES) -> float:
    """
    max over the v grid of |F(xv, T) − F(x, T)|, β = 1.

    Raises:
        DomainError: v_samples < 16, x < 1, or x·2 log T beyond the phase cap
        HeightExceededError: T > zs.t_max
    """
    x, T, v_samples = float(x), float(T), int(v_samples)
    if v_samples < V_SAMPLES_MIN:
        raise DomainError(f"v_samples must be >= {V_SAMPLES_MIN}, got {v_samples}")
    if not x >= 1.0:
        raise DomainError(f"x must be >= 1, got {x!r}")
    if not T >= T_MIN:
        raise DomainError(f"T must be >= {T_MIN:g}, got {T!r}")
    if T > zs.t_max:
        raise HeightExceededError(T, zs.t_max)
    log_x = math.log(x)
    log_v = v_grid(T, v_samples)
    if log_x + log_v[-1] > LOG_X_CAP:
        raise DomainError(f"log(x·2 log T) = {log_x + log_v[-1]:.3f} above the phase-safe cap {LOG_X_CAP:g}")
    values = f_direct_many(zs, np.concatenate(([log_x], log_x + log_v)), T, 1.0)
    stat = float(np.max(np.abs(values[1:] - values[0])))
    log.debug("conjecture2 x=%g T=%g v_samples=%d: stat=%.12g", x, T, v_samples, stat)
    return stat


def _grid(xs: Iterable[float], Ts: Iterable[float]) -> list[tuple[float, float]]:
    points = [(float(x), float(T)) for T in Ts for x in xs]
    if not points:
        raise EmptyGridError("empty (x, T) grid")
    return points


def _map(func, points, workers: int):
    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(func, points))
    return [func(p) for p in points]


def conjecture2_report(
    zs: ZeroSet,
    xs: Iterable[float],
    Ts: Iterable[float],
    v_samples: int = DEFAULT_V_SAMPLES,
    ell: EllSchedule | None = None,
    beta: BetaSchedule | None = None,
    *,
    workers: int = 1,
) -> ScanReport:
    """
    Rows (x, T, v_samples, stat, normalization, normalized) with the
    normalization T·𝓛(T)/β(T)².
    """
    ell = ell or EllSchedule()
    beta = beta or BetaSchedule()
    points = _grid(xs, Ts)

    def run(point: tuple[float, float]) -> dict:
        x, T = point
        stat = conjecture2_stat(zs, x, T, v_samples)
        b = float(beta(T))
        norm = T * float(ell(T)) / (b * b)
        return {
            "x": x,
            "T": T,
            "v_samples": int(v_samples),
            "stat": stat,
            "normalization": norm,
            "normalized": stat / norm,
            "t_max": zs.t_max,
        }

    rows = _map(run, points, workers)
    report = ScanReport(
        "conjecture2",
        rows,
        metadata={"zeros": zs.provenance(), "ell": ell.describe(), "beta": beta.describe()},
    )
    report.record(max_normalized=report.column_max("normalized"))
    log.info("conjecture2 report: %d points, max normalized %.6g", len(rows), report.metadata["max_normalized"])
    return report


def conjecture1_report(
    zs: ZeroSet,
    xs: Iterable[float],
    Ts: Iterable[float],
    beta: BetaSchedule,
    ell: EllSchedule | None = None,
    window: WindowSchedule | None = None,
    *,
    workers: int = 1,
) -> ScanReport:
    """
    Rows (x, T, beta, F_beta, bound_scale, ratio) with ratio = F_β(x,T)/(T·𝓛(T)).

    `in_range` flags W(x) <= T <= √x·log²x; points with log x > 25 are kept
    as out-of-range rows with nan values.
    """
    ell = ell or EllSchedule()
    window = window or WindowSchedule()
    points = _grid(xs, Ts)

    def run(point: tuple[float, float]) -> dict:
        x, T = point
        log_x = math.log(x)
        phase_safe = log_x <= LOG_X_CAP
        b = float(beta(T))
        scale = T * float(ell(T))
        value = f_direct(zs, x, T, b).value if phase_safe else float("nan")
        in_range = bool(x > math.e and float(window.log_window(x)) <= math.log(T) and T <= math.sqrt(x) * log_x**2)
        return {
            "x": x,
            "T": T,
            "beta": b,
            "F_beta": value,
            "bound_scale": scale,
            "ratio": value / scale,
            "in_range": in_range,
            "phase_safe": phase_safe,
            "t_max": zs.t_max,
        }

    rows = _map(run, points, workers)
    report = ScanReport(
        "conjecture1",
        rows,
        metadata={
            "zeros": zs.provenance(),
            "ell": ell.describe(),
            "beta": beta.describe(),
            "window": window.describe(),
        },
    )
    report.record(max_ratio=report.column_max("ratio"))
    return report


__all__ = ["v_grid", "conjecture2_stat", "conjecture2_report", "conjecture1_report"]

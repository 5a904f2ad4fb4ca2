"""
Zero finding on the critical line.

Pipeline:
1. cut [10, t_max] into chunks of width 100 anchored at t = 10;
2. per chunk, sample Z (`hardy_z`, exact sign) on a grid of a quarter Gram
   gap and keep the sign changes;
3. narrow each bracket by vectorised bisection on `scan_z`, then polish it
   with brentq on the precise Z inside the bracket;
4. merge chunks in order and check the count against N(T) at every integer
   height, rescanning offending unit intervals at 4x density.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from src.zpc.errors import CompletenessError, DomainError
from src.zpc.logging_setup import get_logger

from .constants import (CHUNK_WIDTH, FAST_BISECTION_STEPS, POLISH_HALF_WIDTH,
                        RESCAN_DENSITY, REFINE_TOL_MAX, REFINE_TOL_MIN,
                        SCAN_START, T_MAX_MAX, T_MAX_MIN)
from .counting import completeness_offenders
from .riemann_siegel import grid_step, hardy_z, precise_z, scan_z
from .zero_set import ZeroSet

log = get_logger(__name__)


@dataclass(frozen=True)
class ScanChunk:
    """A t-interval scanned as one unit of work."""

    start: float
    stop: float
    step: float
    refine_tol: float

    def grid(self) -> np.ndarray:
        n = max(1, int(math.ceil((self.stop - self.start) / self.step - 1e-9)))
        return np.linspace(self.start, self.stop, n + 1)


def _plan_chunks(t_max: float, refine_tol: float) -> list[ScanChunk]:
    chunks = []
    start = SCAN_START
    while start < t_max:
        nominal_stop = start + CHUNK_WIDTH
        # Gram spacing shrinks with t: the nominal end gives the finest step
        step = grid_step(nominal_stop)
        chunks.append(ScanChunk(start, min(nominal_stop, t_max), step, refine_tol))
        start = nominal_stop
    return chunks


def _bisect_fast(a: np.ndarray, b: np.ndarray, negative_at_a: np.ndarray) -> np.ndarray:
    for _ in range(FAST_BISECTION_STEPS):
        mid = 0.5 * (a + b)
        same = np.signbit(scan_z(mid)) == negative_at_a
        a = np.where(same, mid, a)
        b = np.where(same, b, mid)
    return 0.5 * (a + b)


def _polish(a: float, b: float, guess: float, tol: float) -> float:
    width = b - a
    candidates = (
        (max(a, guess - POLISH_HALF_WIDTH), min(b, guess + POLISH_HALF_WIDTH)),
        (a, b),
        (max(SCAN_START, a - width), b + width),
    )
    for lo, hi in candidates:
        f_lo, f_hi = precise_z(lo), precise_z(hi)
        if f_lo == 0.0:
            return lo
        if f_hi == 0.0:
            return hi
        if (f_lo < 0.0) != (f_hi < 0.0):
            return float(brentq(precise_z, lo, hi, xtol=tol, maxiter=200))
    raise CompletenessError(f"no sign change of precise Z near bracket ({a}, {b})")


def scan_chunk(chunk: ScanChunk) -> np.ndarray:
    """Refined ordinates of the sign changes of Z inside one chunk."""
    grid = chunk.grid()
    z = hardy_z(grid)
    negative = np.signbit(z)
    idx = np.flatnonzero(negative[:-1] != negative[1:])
    if idx.size == 0:
        return np.empty(0)
    guesses = _bisect_fast(grid[idx], grid[idx + 1], negative[idx])
    roots = np.array(
        [_polish(grid[i], grid[i + 1], g, chunk.refine_tol) for i, g in zip(idx, guesses)]
    )
    log.debug("Chunk [%.1f, %.1f]: %d sign changes", chunk.start, chunk.stop, roots.size)
    return roots


def _run_chunks(chunks: list[ScanChunk], workers: int) -> list[np.ndarray]:
    if workers <= 1 or len(chunks) <= 1:
        return [scan_chunk(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(scan_chunk, chunks))


def _merge(parts: list[np.ndarray], t_max: float, tol: float) -> np.ndarray:
    gammas = np.concatenate(parts) if parts else np.empty(0)
    gammas = np.unique(gammas[(gammas > 0.0) & (gammas <= t_max)])
    if gammas.size < 2:
        return gammas
    # one root reached from two neighbouring brackets
    distinct = np.concatenate(([True], np.diff(gammas) > 2.0 * tol))
    return gammas[distinct]


def _rescan(
    gammas: np.ndarray, heights: np.ndarray, t_max: float, refine_tol: float, workers: int
) -> np.ndarray:
    chunks = []
    for T in heights:
        lo = max(SCAN_START, float(T) - 1.0)
        chunks.append(ScanChunk(lo, float(T), grid_step(float(T)) / RESCAN_DENSITY, refine_tol))
    parts = _run_chunks(chunks, workers)
    keep = np.ones(gammas.size, dtype=bool)
    for chunk in chunks:
        keep &= ~((gammas > chunk.start) & (gammas <= chunk.stop))
    return _merge([gammas[keep], *parts], t_max, refine_tol)


def _check_heights(t_max: float) -> np.ndarray:
    heights = np.arange(math.ceil(SCAN_START), math.floor(t_max) + 1, dtype=np.float64)
    if heights.size == 0 or heights[-1] < t_max:
        heights = np.append(heights, t_max)
    return heights


def find_zeros(t_max: float, refine_tol: float = 1e-10, *, workers: int = 1) -> ZeroSet:
    """
    Every zero ordinate γ <= t_max.

    Args:
        t_max: complete height, 20 <= t_max <= 1e5
        refine_tol: absolute tolerance of each ordinate, 1e-12 .. 1e-6
        workers: processes used for the chunk scan (1 = in-process)

    Returns:
        ZeroSet with source "computed" and precision refine_tol

    Raises:
        DomainError: parameters outside their ranges
        CompletenessError: the count still drifts from N(T) after rescanning
    """
    if not (T_MAX_MIN <= t_max <= T_MAX_MAX):
        raise DomainError(f"t_max must lie in [{T_MAX_MIN}, {T_MAX_MAX}], got {t_max!r}")
    if not (REFINE_TOL_MIN <= refine_tol <= REFINE_TOL_MAX):
        raise DomainError(
            f"refine_tol must lie in [{REFINE_TOL_MIN}, {REFINE_TOL_MAX}], got {refine_tol!r}"
        )
    chunks = _plan_chunks(t_max, refine_tol)
    log.info("Zero scan to t_max=%s: %d chunks, workers=%d", t_max, len(chunks), workers)
    gammas = _merge(_run_chunks(chunks, workers), t_max, refine_tol)

    heights = _check_heights(t_max)
    offenders = completeness_offenders(gammas, heights)
    if offenders.size:
        log.warning(
            "Count drift at %d heights (first T=%s); rescanning at %dx density",
            offenders.size,
            offenders[0],
            RESCAN_DENSITY,
        )
        gammas = _rescan(gammas, offenders, t_max, refine_tol, workers)
        offenders = completeness_offenders(gammas, heights)
        if offenders.size:
            raise CompletenessError(
                f"zero count drifts from the Riemann–von Mangoldt formula at T={offenders[0]}"
                f" ({offenders.size} heights) after rescan"
            )

    log.info("Found %d ordinates up to %s", gammas.size, t_max)
    return ZeroSet(gammas, t_max, "computed", refine_tol)


__all__ = ["ScanChunk", "scan_chunk", "find_zeros"]

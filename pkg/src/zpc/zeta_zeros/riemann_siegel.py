"""
Riemann–Siegel theta and Hardy Z functions.

Z(t) = e^{iθ(t)} ζ(1/2 + it) is real for real t and its sign changes are the
zero ordinates γ. Two evaluation paths:

- `scan_z`: vectorised Riemann–Siegel main sum plus the first remainder
  term C0, accurate to about 1e-2 for t >= 10; used to scan grids;
- `precise_z`: mpmath `siegelz`, used to polish brackets.

`hardy_z` returns the fast value where it is farther than
FAST_Z_ERROR_BOUND from zero and the precise value elsewhere, so its sign
is always right and it is accurate near the zeros.
"""

from __future__ import annotations

import math

import mpmath
import numpy as np

from src.zpc.errors import DomainError
from src.zpc.numerics.constants import TWO_PI

from .constants import (C0_SINGULAR_TOL, EVAL_BATCH, FAST_Z_ERROR_BOUND,
                        GRID_SAMPLES_PER_GAP, GRID_STEP_MAX, PRECISE_DPS,
                        RS_MIN_HEIGHT)


def _as_heights(t) -> tuple[np.ndarray, bool]:
    arr = np.asarray(t, dtype=np.float64)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if arr.size and (not np.all(np.isfinite(arr)) or float(arr.min()) < RS_MIN_HEIGHT):
        raise DomainError(
            f"Riemann–Siegel formulas need t >= {RS_MIN_HEIGHT}, got min {float(arr.min())!r}"
        )
    return arr, scalar


def riemann_siegel_theta(t):
    """
    θ(t) by its asymptotic expansion.

    Terms up to t^-7 are kept, so the absolute error is below 1e-12 for
    t >= 10.

    Args:
        t: height (float or array), t >= 10

    Returns:
        θ(t), float for scalar input, array otherwise

    Raises:
        DomainError: if t < 10
    """
    arr, scalar = _as_heights(t)
    inv = 1.0 / arr
    inv2 = inv * inv
    series = inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0))))
    theta = 0.5 * arr * np.log(arr / TWO_PI) - 0.5 * arr - math.pi / 8.0 + series
    return float(theta[0]) if scalar else theta


def remainder_c0(p):
    """
    First Riemann–Siegel correction Ψ(p) = cos(2π(p² − p − 1/16)) / cos(2πp).

    The singularities at p = 1/4 and p = 3/4 are removable; close to them the
    limit (2p − 1)·sin(2π(p² − p − 1/16)) / sin(2πp) is used.
    """
    p = np.asarray(p, dtype=np.float64)
    arg = TWO_PI * (p * p - p - 1.0 / 16.0)
    den = np.cos(TWO_PI * p)
    near = np.abs(den) < C0_SINGULAR_TOL
    regular = np.cos(arg) / np.where(near, 1.0, den)
    with np.errstate(divide="ignore", invalid="ignore"):
        limit = (2.0 * p - 1.0) * np.sin(arg) / np.sin(TWO_PI * p)
    return np.where(near, limit, regular)


def _main_sum(t: np.ndarray) -> np.ndarray:
    out = np.empty_like(t)
    for start in range(0, t.size, EVAL_BATCH):
        tb = t[start : start + EVAL_BATCH]
        a = np.sqrt(tb / TWO_PI)
        n_top = np.floor(a)
        n = np.arange(1.0, float(n_top.max()) + 1.0)
        theta = riemann_siegel_theta(tb)
        phase = theta[:, None] - tb[:, None] * np.log(n)[None, :]
        terms = np.cos(phase) / np.sqrt(n)[None, :]
        terms[n[None, :] > n_top[:, None]] = 0.0
        main = 2.0 * np.sum(terms, axis=1)
        # (-1)^(N-1)
        sign = np.where(np.fmod(n_top, 2.0) == 1.0, 1.0, -1.0)
        out[start : start + tb.size] = main + sign * (tb / TWO_PI) ** -0.25 * remainder_c0(a - n_top)
    return out


def precise_z(t: float) -> float:
    """
    Z(t) from mpmath's `siegelz` at PRECISE_DPS digits.

    `mp.rs_z` is not used: at 16 digits it does not terminate for t below
    about 77 and refuses higher heights.
    """
    with mpmath.workdps(PRECISE_DPS):
        return float(mpmath.re(mpmath.siegelz(t)))


def scan_z(t):
    """
    Fast Z(t): main sum plus C0, error about 1e-2 for t >= 10.

    Only the sign away from the zeros is reliable; grids and bracket
    narrowing use it, everything else goes through `hardy_z`.
    """
    arr, scalar = _as_heights(t)
    values = _main_sum(arr)
    return float(values[0]) if scalar else values


def hardy_z(t, precise: bool = False):
    """
    Hardy's Z function.

    The fast value is kept where |Z| >= FAST_Z_ERROR_BOUND; closer to zero
    it is replaced by `precise_z`, so the sign is right wherever |Z| > 1e-6
    and |Z(γ)| stays at round-off level.

    Args:
        t: height (float or array), t >= 10
        precise: evaluate every point with mpmath

    Returns:
        Z(t), float for scalar input, array otherwise. Always real.

    Raises:
        DomainError: if t < 10
    """
    arr, scalar = _as_heights(t)
    if precise:
        values = np.array([precise_z(float(v)) for v in arr])
    else:
        values = _main_sum(arr)
        for i in np.flatnonzero(np.abs(values) < FAST_Z_ERROR_BOUND):
            values[i] = precise_z(float(arr[i]))
    return float(values[0]) if scalar else values


def gram_spacing(t):
    """Average gap 2π / log(t/2π) between consecutive ordinates near t."""
    arr, scalar = _as_heights(t)
    gap = TWO_PI / np.log(arr / TWO_PI)
    return float(gap[0]) if scalar else gap


def grid_step(t: float) -> float:
    """Scan step min(0.1, Gram spacing / 4)."""
    return min(GRID_STEP_MAX, gram_spacing(float(t)) / GRID_SAMPLES_PER_GAP)


__all__ = [
    "riemann_siegel_theta",
    "remainder_c0",
    "hardy_z",
    "scan_z",
    "precise_z",
    "gram_spacing",
    "grid_step",
]

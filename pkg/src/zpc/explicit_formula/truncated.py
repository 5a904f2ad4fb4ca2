"""
Truncated explicit formula and the zero sums behind R(x)/√x.

Under RH the zeros come in conjugate pairs ½ ± iγ, so

    ψ(x) ≈ x − 2 Re Σ_{0<γ<=Y} x^{½+iγ}/(½+iγ)
    R(x)/√x ≈ −2 Im Σ_{W<γ<=Y} x^{iγ}/γ.
"""

from __future__ import annotations

import math

import numpy as np

from src.zpc.errors import DomainError, HeightExceededError, IntegerArgumentError, RangeError
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.phase import unit_phasors
from src.zpc.numerics.summation import pairwise_kahan_sum
from src.zpc.zeta_zeros import ZeroSet

from .constants import LOG_TWO_PI, W_MIN, X_MIN, Y_FACTOR, Y_MIN

log = get_logger(__name__)


def check_x(x: float) -> float:
    """x >= 2 and not an integer (ψ jumps at prime powers)."""
    x = float(x)
    if not x >= X_MIN:
        raise DomainError(f"x must be >= {X_MIN:g}, got {x!r}")
    if x == math.floor(x):
        raise IntegerArgumentError(f"x={x!r} is an integer: ψ has a jump there, use x ± 0.5")
    return x


def check_window(W: float, Y: float, zs: ZeroSet) -> tuple[float, float]:
    W, Y = float(W), float(Y)
    if not W >= W_MIN:
        raise RangeError(f"W must be >= {W_MIN:g}, got {W!r}")
    if W > Y:
        raise RangeError(f"need W <= Y, got W={W!r}, Y={Y!r}")
    if Y > zs.t_max:
        raise HeightExceededError(Y, zs.t_max)
    return W, Y


def default_height(x: float) -> float:
    """Y(x) = 3·√x·log²(2x)."""
    return Y_FACTOR * math.sqrt(x) * math.log(2.0 * x) ** 2


def lower_order_terms(x: float) -> float:
    """−log 2π − ½·log(1 − x^{-2}), the constant and trivial-zero terms of ψ."""
    return -LOG_TWO_PI - 0.5 * math.log1p(-1.0 / (x * x))


def truncated_psi(x: float, Y: float, zs: ZeroSet, lower_order: bool = False) -> float:
    """
    x − 2·Re Σ_{0<γ<=Y} x^{½+iγ}/(½+iγ).

    Args:
        x: x >= 2, not an integer
        Y: truncation height, 14 < Y <= zs.t_max
        zs: zero set
        lower_order: also add −log 2π − ½ log(1 − x^{-2})

    Raises:
        IntegerArgumentError: x is an integer
        RangeError, HeightExceededError: Y outside (14, t_max]
    """
    x = check_x(x)
    Y = float(Y)
    if not Y > Y_MIN:
        raise RangeError(f"Y must exceed {Y_MIN:g}, got {Y!r}")
    if Y > zs.t_max:
        raise HeightExceededError(Y, zs.t_max)

    gammas = zs.up_to(Y)
    cos_g, sin_g = unit_phasors(gammas, math.log(x))
    # Re[(c + is)/(½ + iγ)] = (c/2 + sγ)/(¼ + γ²)
    terms = (0.5 * cos_g + sin_g * gammas) / (0.25 + gammas * gammas)
    value = x - 2.0 * math.sqrt(x) * pairwise_kahan_sum(terms)
    if lower_order:
        value += lower_order_terms(x)
    log.debug("truncated_psi(%g, Y=%g): %d zeros, value=%.12g", x, Y, gammas.size, value)
    return value


def zero_sum_r(x: float, W: float, Y: float, zs: ZeroSet) -> float:
    """
    −2·Im Σ_{W<γ<=Y} x^{iγ}/γ, the zero-side approximation of R(x)/√x.

    W = Y gives the empty sum, 0.
    """
    x = float(x)
    if not x > 1.0:
        raise DomainError(f"x must exceed 1, got {x!r}")
    W, Y = check_window(W, Y, zs)
    gammas = zs.between(W, Y)
    if gammas.size == 0:
        return 0.0
    _, sin_g = unit_phasors(gammas, math.log(x))
    return -2.0 * pairwise_kahan_sum(sin_g / gammas)


def reciprocal_sums(zs: ZeroSet, W: float) -> dict:
    """
    Σ_{γ<=W} 1/γ compared with log²W, and Σ_{γ>W} 1/γ² (over the set)
    compared with log W / W.
    """
    W = float(W)
    if not W_MIN <= W <= zs.t_max:
        raise RangeError(f"W must lie in [{W_MIN:g}, {zs.t_max:g}], got {W!r}")
    below = zs.up_to(W)
    above = zs.gammas[below.size :]
    inv = pairwise_kahan_sum(1.0 / below)
    inv_sq_tail = pairwise_kahan_sum(1.0 / (above * above))
    log_w = math.log(W)
    return {
        "W": W,
        "count": int(below.size),
        "sum_inv": inv,
        "sum_inv_over_log2": inv / (log_w * log_w),
        "tail_inv_sq": inv_sq_tail,
        "tail_inv_sq_scaled": inv_sq_tail * W / log_w,
        "t_max": zs.t_max,
    }


__all__ = [
    "check_x",
    "check_window",
    "default_height",
    "lower_order_terms",
    "truncated_psi",
    "zero_sum_r",
    "reciprocal_sums",
]

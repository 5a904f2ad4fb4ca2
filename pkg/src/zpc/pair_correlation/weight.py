"""
Pair weight w_β(u) = 4β² / (4β² + u²) and its Fourier representation

    β ∫ e^{-2β|u|} e^{ivu} du = w_β(v).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from src.zpc.errors import DomainError
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.quadrature import gauss_doubling

from .constants import FOURIER_DECAY, FOURIER_PANEL, FOURIER_TOL_MIN, PANEL_DECAY

log = get_logger(__name__)


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not (beta > 0.0 and math.isfinite(beta)):
        raise DomainError(f"beta must be positive and finite, got {beta!r}")
    return beta


def weight(beta: float, u):
    """w_β(u), vectorised over u."""
    beta = _check_beta(beta)
    four_b2 = 4.0 * beta * beta
    u = np.asarray(u, dtype=np.float64)
    w = four_b2 / (four_b2 + u * u)
    return float(w) if w.ndim == 0 else w


@dataclass(frozen=True)
class WeightKernel:
    """
    w_β for a fixed β.

    β = 1 gives the weight w(u) = 4/(4 + u²) of F(x, T).
    """

    beta: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", _check_beta(self.beta))

    def __call__(self, u):
        return weight(self.beta, u)

    def laplace_density(self, u):
        """β·e^{-2β|u|}, whose Fourier transform is w_β."""
        u = np.asarray(u, dtype=np.float64)
        return self.beta * np.exp(-2.0 * self.beta * np.abs(u))


def weight_identity_residual(beta: float, u):
    """
    |w_β − β²·w − (1 − β²)·w·w_β| with w = w_1.

    This algebraic identity turns F_β into F plus a correction; the residual
    is zero up to rounding.
    """
    w_beta = np.asarray(weight(beta, u))
    w_one = np.asarray(weight(1.0, u))
    b2 = float(beta) ** 2
    residual = np.abs(w_beta - b2 * w_one - (1.0 - b2) * w_one * w_beta)
    return float(residual) if residual.ndim == 0 else residual


def weight_fourier_check(beta: float, v: float, tol: float = FOURIER_TOL_MIN) -> float:
    """
    |2β ∫_0^U e^{-2βu} cos(vu) du − w_β(v)| with U = 16.1/β.

    The integral is computed by composite Gauss quadrature with panel
    halving; the truncated tail is below 1e-14.

    Args:
        beta: β > 0
        v: frequency
        tol: requested accuracy of the quadrature

    Returns:
        the absolute residual (expected below tol for tol >= 1e-8)
    """
    beta = _check_beta(beta)
    freq = abs(float(v))
    upper = FOURIER_DECAY / beta
    panel = min(FOURIER_PANEL / max(freq, 1.0), PANEL_DECAY / beta)

    def integrand(u: np.ndarray) -> np.ndarray:
        return 2.0 * beta * np.exp(-2.0 * beta * u) * np.cos(freq * u)

    result = gauss_doubling(
        integrand, 0.0, upper, panel, atol=0.1 * float(tol), rtol=0.0, label="fourier pair"
    )
    residual = abs(result.value - weight(beta, freq))
    log.debug("Fourier pair beta=%g v=%g: residual %.3e (%d nodes)", beta, v, residual, result.nodes)
    return residual


__all__ = ["weight", "WeightKernel", "weight_identity_residual", "weight_fourier_check"]

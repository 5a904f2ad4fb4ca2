"""
F_β(x, T) through its integral representation

    F_β(x, T) = β ∫ e^{-2β|u|} |S(u)|² du,   S(u) = Σ_{0<γ<=T} e^{iγ(log x + u)},

folded onto [0, U]:  β ∫_0^U e^{-2βu} (|S(u)|² + |S(−u)|²) du  plus a tail
bounded by N² e^{-2βU}. The integrand is a square, so the value is
non-negative up to quadrature error.
"""

from __future__ import annotations

import math

import numpy as np

from src.zpc.errors import DomainError
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.constants import EPS, SUMMATION_SAFETY
from src.zpc.numerics.phase import reduce_phase
from src.zpc.numerics.quadrature import gauss_doubling
from src.zpc.zeta_zeros import ZeroSet

from .constants import (DEFAULT_TAIL_TOL, INTEGRAL_RTOL, PANEL_DECAY,
                        PANEL_OSCILLATIONS, PHASE_BATCH_ELEMENTS, TAIL_TOL_MAX,
                        TAIL_TOL_MIN)
from .direct import FEvaluation, check_arguments

log = get_logger(__name__)


def truncation_point(beta: float, T: float, tail_tol: float) -> float:
    """U = log(β·T·log²T / tail_tol) / (2β)."""
    return math.log(beta * T * math.log(T) ** 2 / tail_tol) / (2.0 * beta)


def initial_panel(gammas: np.ndarray, beta: float) -> float:
    """Panel width resolving both the oscillation of |S|² and the decay e^{-2βu}."""
    spread = float(gammas[-1] - gammas[0]) if gammas.size > 1 else 1.0
    return min(PANEL_OSCILLATIONS / max(spread, 1.0), PANEL_DECAY / beta)


class ZeroSumModulus:
    """
    u ↦ |S(u)|² + |S(−u)|² for S(u) = Σ e^{iγ(log x + u)}.

    Phases are θ_γ + (γ·u mod 2π) with θ_γ = γ·log x mod 2π, both reduced
    separately.
    """

    def __init__(self, gammas: np.ndarray, log_x: float) -> None:
        self.gammas = np.asarray(gammas, dtype=np.float64)
        self.base = reduce_phase(self.gammas, log_x)
        self.rows = max(1, PHASE_BATCH_ELEMENTS // max(self.gammas.size, 1))

    def _modulus(self, u: np.ndarray) -> np.ndarray:
        phases = self.base[None, :] + reduce_phase(self.gammas[None, :], u[:, None])
        re = np.cos(phases).sum(axis=1)
        im = np.sin(phases).sum(axis=1)
        return re * re + im * im

    def __call__(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=np.float64)
        out = np.empty(u.size)
        for start in range(0, u.size, self.rows):
            part = u[start : start + self.rows]
            out[start : start + part.size] = self._modulus(part) + self._modulus(-part)
        return out


def f_integral(
    zs: ZeroSet,
    x: float,
    T: float,
    beta: float = 1.0,
    tail_tol: float = DEFAULT_TAIL_TOL,
) -> FEvaluation:
    """
    F_β(x, T) by quadrature of the integral representation.

    Args:
        zs, x, T, beta: as f_direct
        tail_tol: 1e-12 <= tail_tol <= 1e-4, sets the truncation point U

    Returns:
        FEvaluation with method "integral"; err_estimate sums the last
        quadrature difference, the tail bound and a rounding term

    Raises:
        DomainError: tail_tol outside its range (plus f_direct's errors)
        ConvergenceError: panel halving did not converge
    """
    log_x, T, beta = check_arguments(zs, x, T, beta)
    tail_tol = float(tail_tol)
    if not (TAIL_TOL_MIN <= tail_tol <= TAIL_TOL_MAX):
        raise DomainError(f"tail_tol must lie in [{TAIL_TOL_MIN:g}, {TAIL_TOL_MAX:g}], got {tail_tol!r}")

    gammas = zs.up_to(T)
    n = gammas.size
    if n == 0:
        return FEvaluation(float(x), T, beta, 0.0, "integral", 0.0, 0)

    upper = truncation_point(beta, T, tail_tol)
    panel = initial_panel(gammas, beta)
    modulus = ZeroSumModulus(gammas, log_x)

    def integrand(u: np.ndarray) -> np.ndarray:
        return np.exp(-2.0 * beta * u) * modulus(u)

    result = gauss_doubling(
        integrand,
        0.0,
        upper,
        panel,
        atol=0.0,
        rtol=INTEGRAL_RTOL,
        label=f"f_integral(x={x:g}, T={T:g}, beta={beta:g})",
    )
    value = beta * result.value
    tail = float(n) * n * math.exp(-2.0 * beta * upper)
    rounding = SUMMATION_SAFETY * EPS * n * max(value, float(n))
    err = beta * result.error + tail + rounding
    log.info(
        "f_integral x=%g T=%g beta=%g: U=%.3f nodes=%d value=%.12g err=%.3e",
        x,
        T,
        beta,
        upper,
        result.nodes,
        value,
        err,
    )
    return FEvaluation(float(x), T, beta, value, "integral", err, int(n))


__all__ = ["f_integral", "truncation_point", "initial_panel", "ZeroSumModulus"]

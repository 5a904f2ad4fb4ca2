"""
Direct evaluation of the pair correlation sum

    F_β(x, T) = Σ_{0<γ,γ'<=T} x^{i(γ−γ')} w_β(γ − γ')
              = N(T) + 2 Σ_{γ'<γ} cos((γ − γ')·log x) w_β(γ − γ').

The pair loop runs over square tiles of the strict lower triangle. Pair
cosines come from per-ordinate reduced phases,
cos(a − b) = cos a cos b + sin a sin b, so that log x ↦ −log x leaves every
term bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from src.zpc.errors import DomainError, HeightExceededError
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.constants import EPS
from src.zpc.numerics.phase import unit_phasors
from src.zpc.numerics.summation import (compensated_cumsum, pairwise_kahan_sum,
                                        two_sum)
from src.zpc.zeta_zeros import ZeroSet

from .constants import (DENSE_MAX_ZEROS, DIRECT_ERROR_TERMS, LOG_X_CAP, METHODS,
                        PHASE_BATCH_ELEMENTS, T_MIN, TILE_SIZE)
from .weight import _check_beta, weight

log = get_logger(__name__)


@dataclass(frozen=True)
class FEvaluation:
    """
    One value of F_β(x, T).

    Attributes:
        x, T, beta: arguments
        value: F_β(x, T)
        method: "direct" or "integral"
        err_estimate: bound on the absolute error of value
        count: N(T), number of ordinates summed
    """

    x: float
    T: float
    beta: float
    value: float
    method: str
    err_estimate: float
    count: int

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise DomainError(f"unknown method {self.method!r}")
        if self.err_estimate < 0.0:
            raise DomainError("err_estimate must be non-negative")

    @property
    def normalized(self) -> float:
        return self.value / self.count if self.count else float("nan")

    def as_row(self) -> dict:
        row = asdict(self)
        row["normalized"] = self.normalized
        return row


def check_arguments(zs: ZeroSet, x: float, T: float, beta: float) -> tuple[float, float, float]:
    """
    Validate (x, T, β) against a zero set; returns (log x, T, β).

    Raises:
        DomainError: x < 1, log x above the phase-safe cap, T < 3, β <= 0
        HeightExceededError: T > zs.t_max
    """
    x, T = float(x), float(T)
    beta = _check_beta(beta)
    if not x >= 1.0:
        raise DomainError(f"x must be >= 1, got {x!r}")
    log_x = math.log(x)
    if log_x > LOG_X_CAP:
        raise DomainError(f"log x = {log_x:.3f} above the phase-safe cap {LOG_X_CAP:g}")
    if not T >= T_MIN:
        raise DomainError(f"T must be >= {T_MIN:g}, got {T!r}")
    if T > zs.t_max:
        raise HeightExceededError(T, zs.t_max)
    return log_x, T, beta


class PairKernel:
    """
    Tiled strict-lower-triangle pair sums over a fixed list of ordinates.

    For a given log x, row k collects
        r_k = Σ_{j<k} cos((γ_k − γ_j)·log x) · w_β(γ_k − γ_j)
        m_k = Σ_{j<k} w_β(γ_k − γ_j)
    Tiles are visited in a fixed order and combined with a compensated carry.
    """

    def __init__(self, gammas: np.ndarray, beta: float, tile: int = TILE_SIZE) -> None:
        self.gammas = np.asarray(gammas, dtype=np.float64)
        self.beta = _check_beta(beta)
        self.tile = int(tile)

    def __len__(self) -> int:
        return int(self.gammas.size)

    def row_sums(self, log_x: float) -> tuple[np.ndarray, np.ndarray]:
        g = self.gammas
        n = g.size
        cos_g, sin_g = unit_phasors(g, log_x)
        rows = np.zeros(n)
        mass = np.zeros(n)
        for i0 in range(0, n, self.tile):
            i1 = min(i0 + self.tile, n)
            acc = np.zeros(i1 - i0)
            comp = np.zeros(i1 - i0)
            mass_acc = np.zeros(i1 - i0)
            for j0 in range(0, i1, self.tile):
                j1 = min(j0 + self.tile, i1)
                w = weight(self.beta, g[i0:i1, None] - g[None, j0:j1])
                cos_d = cos_g[i0:i1, None] * cos_g[None, j0:j1] + sin_g[i0:i1, None] * sin_g[None, j0:j1]
                block = cos_d * w
                if j0 == i0:
                    block = np.tril(block, k=-1)
                    w = np.tril(w, k=-1)
                acc, err = two_sum(acc, block.sum(axis=1))
                comp += err
                mass_acc += w.sum(axis=1)
            rows[i0:i1] = acc + comp
            mass[i0:i1] = mass_acc
            log.debug("pair rows %d..%d done", i0, i1)
        return rows, mass

    def evaluate(self, log_x: float) -> tuple[float, float]:
        """(F_β, error estimate) at the given log x (any sign)."""
        n = len(self)
        if n == 0:
            return 0.0, 0.0
        rows, mass = self.row_sums(log_x)
        value = n + 2.0 * pairwise_kahan_sum(rows)
        return value, _error_model(n, n + 2.0 * float(np.sum(mass)))

    def prefix(self, log_x: float) -> np.ndarray:
        """F_β(x, γ_k) for every k: the step values of v ↦ F_β(x, v)."""
        if len(self) == 0:
            return np.empty(0)
        rows, _ = self.row_sums(log_x)
        return compensated_cumsum(1.0 + 2.0 * rows)

    def total_weight(self) -> float:
        """Σ_{γ,γ'} w_β(γ − γ'): F_β at x = 1, the trivial upper bound of |F_β|."""
        return self.evaluate(0.0)[0]


def _error_model(n: int, mass: float) -> float:
    # rounding of the pair terms and of the compensated tree reduction
    return EPS * mass * (math.log2(float(n) * n + 2.0) + DIRECT_ERROR_TERMS) + EPS * n


def f_direct(zs: ZeroSet, x: float, T: float, beta: float = 1.0) -> FEvaluation:
    """
    F_β(x, T) by the O(N²) pair sum.

    Args:
        zs: zero set with t_max >= T
        x: x >= 1 with log x <= 25
        T: 3 <= T <= zs.t_max
        beta: β > 0

    Returns:
        FEvaluation with method "direct"
    """
    log_x, T, beta = check_arguments(zs, x, T, beta)
    gammas = zs.up_to(T)
    value, err = PairKernel(gammas, beta).evaluate(log_x)
    log.info("f_direct x=%g T=%g beta=%g: N=%d value=%.12g", x, T, beta, gammas.size, value)
    return FEvaluation(float(x), T, beta, value, "direct", err, int(gammas.size))


def f_direct_prefix(zs: ZeroSet, x: float, T: float, beta: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """
    Ordinates γ_k <= T and the values F_β(x, γ_k).

    F_β(x, v) is constant for γ_k <= v < γ_{k+1}, so these pairs describe
    v ↦ F_β(x, v) exactly on [γ_1, T].
    """
    log_x, T, beta = check_arguments(zs, x, T, beta)
    gammas = zs.up_to(T)
    return gammas, PairKernel(gammas, beta).prefix(log_x)


def f_direct_many(zs: ZeroSet, log_xs, T: float, beta: float = 1.0) -> np.ndarray:
    """
    F_β at many values of log x (any sign), same double sum as f_direct.

    Up to 2048 ordinates the sum is evaluated as the quadratic forms
    cᵀWc + sᵀWs with a dense weight matrix, batched over log x; above that it
    falls back to the tiled kernel one value at a time.
    """
    beta = _check_beta(beta)
    if T > zs.t_max:
        raise HeightExceededError(float(T), zs.t_max)
    log_xs = np.asarray(log_xs, dtype=np.float64).reshape(-1)
    gammas = zs.up_to(T)
    n = gammas.size
    if n == 0:
        return np.zeros(log_xs.size)
    if n > DENSE_MAX_ZEROS:
        kernel = PairKernel(gammas, beta)
        return np.array([kernel.evaluate(lx)[0] for lx in log_xs])

    w = weight(beta, gammas[:, None] - gammas[None, :])
    out = np.empty(log_xs.size)
    rows = max(1, PHASE_BATCH_ELEMENTS // n)
    for start in range(0, log_xs.size, rows):
        chunk = log_xs[start : start + rows]
        cos_g, sin_g = unit_phasors(gammas[None, :], chunk[:, None])
        out[start : start + chunk.size] = np.sum((cos_g @ w) * cos_g, axis=1) + np.sum(
            (sin_g @ w) * sin_g, axis=1
        )
    return out


def normalized_f(zs: ZeroSet, x: float, T: float) -> float:
    """F(x, T)/N(T) with β = 1."""
    ev = f_direct(zs, x, T, 1.0)
    if ev.count == 0:
        raise DomainError(f"no ordinate up to T={T!r}")
    return ev.normalized


def trivial_bound_ratio(ev: FEvaluation) -> float:
    """value / (β·T·log²T), bounded under the trivial bound F_β ≪ β T log²T."""
    return ev.value / (ev.beta * ev.T * math.log(ev.T) ** 2)


__all__ = [
    "FEvaluation",
    "PairKernel",
    "check_arguments",
    "f_direct",
    "f_direct_prefix",
    "f_direct_many",
    "normalized_f",
    "trivial_bound_ratio",
]

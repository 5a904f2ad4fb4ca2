"""
Block bound in terms of pair correlation:

    |Σ_{s<γ<=t} x^{iγ}| ≪ sqrt( (t/β(t)) · max_{s<=v,v'<=t} F_{β(v')}(x, v) ).

F_β(x, v) only changes when v crosses an ordinate, so for every sampled v'
the maximum over v is read off the step values F_β(x, γ_k). The v' grid is
geometric with `v_grid` intervals (endpoints included): doubling `v_grid`
gives a superset of points.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable

import numpy as np

from src.zpc.errors import DomainError, HeightExceededError, RangeError
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.phase import unit_phasors
from src.zpc.numerics.summation import complex_kahan_sum
from src.zpc.pair_correlation import PairKernel
from src.zpc.prime_arith import LambdaTable, psi
from src.zpc.report import ScanReport
from src.zpc.zeta_zeros import ZeroSet

from .constants import DEFAULT_V_GRID, ENVELOPE_C, ORDINATE_REFINE_MAX, V_GRID_MIN
from .truncated import default_height, truncated_psi, zero_sum_r

log = get_logger(__name__)

BetaFunction = Callable[[float], float]


def _block_arguments(x: float, s: float, t: float, zs: ZeroSet, v_grid: int) -> tuple[float, float, float, int]:
    x, s, t, v_grid = float(x), float(s), float(t), int(v_grid)
    if not x >= 1.0:
        raise DomainError(f"x must be >= 1, got {x!r}")
    if not (3.0 <= s < t):
        raise RangeError(f"need 3 <= s < t, got s={s!r}, t={t!r}")
    if t > zs.t_max:
        raise HeightExceededError(t, zs.t_max)
    if v_grid < V_GRID_MIN:
        raise DomainError(f"v_grid must be >= {V_GRID_MIN}, got {v_grid}")
    return x, s, t, v_grid


def _step_value(gammas: np.ndarray, prefix: np.ndarray, v: np.ndarray) -> np.ndarray:
    """F(x, v) from the step values at the ordinates (0 below the first one)."""
    idx = np.searchsorted(gammas, v, side="right")
    padded = np.concatenate(([0.0], prefix))
    return padded[idx]


def lemma1_detail(
    x: float,
    s: float,
    t: float,
    beta_sched: BetaFunction,
    zs: ZeroSet,
    v_grid: int = DEFAULT_V_GRID,
) -> dict:
    """
    Left side, sampled maximum F̂ and ratio for one block (s, t].

    Args:
        x: x >= 1
        s, t: 3 <= s < t <= zs.t_max
        beta_sched: β as a function of height, 0 < β(v) <= v
        zs: zero set
        v_grid: number of geometric intervals of the v' grid (>= 8)

    Returns:
        dict with x, s, t, count, lhs, beta_t, F_hat, ratio
    """
    x, s, t, v_grid = _block_arguments(x, s, t, zs, v_grid)
    log_x = math.log(x)
    block = zs.between(s, t)
    row = {"x": x, "s": s, "t": t, "count": int(block.size)}
    if block.size == 0:
        row.update(lhs=0.0, beta_t=float(beta_sched(t)), F_hat=0.0, ratio=0.0)
        return row

    cos_g, sin_g = unit_phasors(block, log_x)
    lhs = abs(complex_kahan_sum(cos_g + 1j * sin_g))

    v_points = s * (t / s) ** (np.arange(v_grid + 1) / v_grid)
    v_points[0], v_points[-1] = s, t
    if block.size < ORDINATE_REFINE_MAX:
        v_points = np.union1d(v_points, block)

    gammas = zs.up_to(t)
    betas = sorted({float(beta_sched(v)) for v in v_points})
    f_hat = -math.inf
    for beta in betas:
        if not beta > 0.0:
            raise DomainError(f"beta schedule returned {beta!r}")
        prefix = PairKernel(gammas, beta).prefix(log_x)
        f_hat = max(f_hat, float(np.max(_step_value(gammas, prefix, v_points))))

    beta_t = float(beta_sched(t))
    scale = (t / beta_t) * f_hat
    ratio = lhs / math.sqrt(scale) if scale > 0.0 else math.inf
    row.update(lhs=lhs, beta_t=beta_t, F_hat=f_hat, ratio=ratio)
    log.debug("lemma1 x=%g (s,t]=(%g,%g]: lhs=%.6g F_hat=%.6g ratio=%.6g", x, s, t, lhs, f_hat, ratio)
    return row


def lemma1_ratio(
    x: float,
    s: float,
    t: float,
    beta_sched: BetaFunction,
    zs: ZeroSet,
    v_grid: int = DEFAULT_V_GRID,
) -> float:
    """|Σ_{s<γ<=t} x^{iγ}| / sqrt((t/β(t))·F̂); 0 when the block is empty."""
    return lemma1_detail(x, s, t, beta_sched, zs, v_grid)["ratio"]


def lemma1_report(
    zs: ZeroSet,
    triples: Iterable[tuple[float, float, float]],
    beta_sched: BetaFunction,
    v_grid: int = DEFAULT_V_GRID,
) -> ScanReport:
    """Rows (x, s, t, lhs, F_hat, ratio) over (x, s, t) triples; max ratio recorded."""
    rows = []
    for x, s, t in triples:
        row = lemma1_detail(x, s, t, beta_sched, zs, v_grid)
        row["t_max"] = zs.t_max
        rows.append(row)
    report = ScanReport("lemma1", rows, metadata={"zeros": zs.provenance(), "v_grid": v_grid})
    report.record(max_ratio=report.column_max("ratio"))
    log.info("lemma1 report: %d triples, max ratio %.6g", len(rows), report.metadata["max_ratio"])
    return report


def truncation_report(
    zs: ZeroSet,
    table: LambdaTable,
    xs: Iterable[float],
    ys: Iterable[float],
    lower_order: bool = False,
) -> ScanReport:
    """
    Truncated ψ against the sieve: rows (x, Y, truncated_psi, sieve_psi,
    residual, envelope, envelope_ratio) with envelope = (x/Y)·log²(xY).
    """
    ys = list(ys)
    rows = []
    for x in xs:
        sieve_value = psi(x, table)
        for Y in ys:
            value = truncated_psi(x, Y, zs, lower_order=lower_order)
            envelope = (x / Y) * math.log(x * Y) ** 2
            residual = value - sieve_value
            rows.append(
                {
                    "x": float(x),
                    "Y": float(Y),
                    "truncated_psi": value,
                    "sieve_psi": sieve_value,
                    "residual": residual,
                    "envelope": envelope,
                    "envelope_ratio": abs(residual) / envelope,
                    "t_max": zs.t_max,
                }
            )
    report = ScanReport(
        "truncation",
        rows,
        metadata={"zeros": zs.provenance(), "sieve_n_max": table.n_max, "lower_order": lower_order},
    )
    max_ratio = report.column_max("envelope_ratio")
    report.record(max_envelope_ratio=max_ratio, envelope_constant=ENVELOPE_C, within_envelope=bool(max_ratio <= ENVELOPE_C))
    return report


def explicit_report(
    zs: ZeroSet,
    table: LambdaTable,
    xs: Iterable[float],
    W: float,
    Y: float | None = None,
) -> ScanReport:
    """
    Rows (x, W, Y, zero_sum_r, sieve_r_normalized, residual): the zero sum
    over (W, Y] against R(x)/√x from the sieve.

    Y defaults to 3·√x·log²(2x), clipped to zs.t_max (flagged in `y_clipped`).
    """
    rows = []
    for x in xs:
        x = float(x)
        wanted = default_height(x) if Y is None else float(Y)
        height = min(wanted, zs.t_max)
        value = zero_sum_r(x, W, height, zs)
        sieve_r = (psi(x, table) - x) / math.sqrt(x)
        residual = value - sieve_r
        rows.append(
            {
                "x": x,
                "W": float(W),
                "Y": height,
                "zero_sum_r": value,
                "sieve_r_normalized": sieve_r,
                "residual": residual,
                "residual_over_log2W": abs(residual) / math.log(W) ** 2,
                "y_clipped": bool(height < wanted),
                "t_max": zs.t_max,
            }
        )
    report = ScanReport("explicit", rows, metadata={"zeros": zs.provenance(), "sieve_n_max": table.n_max})
    report.record(max_residual_over_log2W=report.column_max("residual_over_log2W"))
    return report


__all__ = [
    "lemma1_detail",
    "lemma1_ratio",
    "lemma1_report",
    "truncation_report",
    "explicit_report",
]

"""
Corollary scans: for each (x, T) the assumed bound on F_β is measured, and
R(x) is normalised by the error term the corollary would imply.

    cor1  β = (log T)^{3-2a}        F_β/(T log T)     target log^a x
    cor2  β = 1                      F/(T log x)       target log^{3/2} x
    cor3  β = log³T/(A⁴(loglog)²)    F_β/(T log T)     target A²(log log x)²
    cor4  β = 1                      F/N(T) − 1        target M(x) + log²W(x)
                                                       with β = (log T)^{B/2}

cor3 rows are exploratory: its hypothesis is not expected over such a long
range.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from src.zpc.errors import DomainError, EmptyGridError
from src.zpc.logging_setup import get_logger
from src.zpc.pair_correlation import f_direct
from src.zpc.pair_correlation.constants import LOG_X_CAP, T_MIN
from src.zpc.prime_arith import LambdaTable, psi
from src.zpc.report import ScanReport
from src.zpc.zeta_zeros import ZeroSet

from .constants import (COROLLARIES, DEFAULT_COR1_A, DEFAULT_COR3_A,
                        DEFAULT_COR4_B, DEFAULT_WINDOW_A, M_X_MIN)
from .schedules import BetaSchedule, EllSchedule, WindowSchedule, theorem1_bound
from .statistics import _map

log = get_logger(__name__)


@dataclass(frozen=True)
class ScanParams:
    """
    Grid and parameters of a corollary scan.

    Attributes:
        xs, Ts: grid values
        a: cor1 exponent, 0 < a <= 3/2
        A: cor3 constant (> 1) and exponent of W(x) = (log x)^A for cor4
        B: cor4 exponent, β = (log T)^{B/2} in the target
        window_A: exponent of the log_power window for cor3
        workers: threads over grid points
    """

    xs: tuple[float, ...] = field(default_factory=tuple)
    Ts: tuple[float, ...] = field(default_factory=tuple)
    a: float = DEFAULT_COR1_A
    A: float = DEFAULT_COR3_A
    B: float = DEFAULT_COR4_B
    window_A: float = DEFAULT_WINDOW_A
    workers: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "xs", tuple(float(x) for x in self.xs))
        object.__setattr__(self, "Ts", tuple(float(T) for T in self.Ts))
        if not self.xs or not self.Ts:
            raise EmptyGridError("scan needs at least one x and one T")
        if not self.B > 0.0:
            raise DomainError(f"B must be positive, got {self.B!r}")

    def describe(self) -> dict:
        out = asdict(self)
        out["xs"], out["Ts"] = list(self.xs), list(self.Ts)
        return out


def _setup(corollary: str, params: ScanParams):
    """(β schedule, window, target(x)) of a corollary."""
    if corollary == "cor1":
        beta = BetaSchedule("cor1_power", a=params.a)
        window = WindowSchedule("cor1_exp", a=params.a)
        return beta, window, lambda x: math.log(x) ** params.a
    if corollary == "cor2":
        return BetaSchedule("constant"), WindowSchedule("cor2_exp"), lambda x: math.log(x) ** 1.5
    if corollary == "cor3":
        beta = BetaSchedule("cor3_gm", A=params.A)
        window = WindowSchedule("log_power", A=params.window_A)
        return beta, window, lambda x: params.A**2 * math.log(math.log(x)) ** 2
    target_beta = BetaSchedule("log_power", exponent=0.5 * params.B)
    window = WindowSchedule("log_power", A=params.A)

    def target(x: float) -> float:
        return theorem1_bound(x, EllSchedule("logT"), target_beta, window) if x >= M_X_MIN else float("nan")

    return BetaSchedule("constant"), window, target


def _ratio(corollary: str, value: float, x: float, T: float, count: int) -> float:
    if corollary == "cor2":
        log_x = math.log(x)
        return value / (T * log_x) if log_x > 0.0 else float("nan")
    if corollary == "cor4":
        return value / count - 1.0 if count else float("nan")
    return value / (T * math.log(T))


def corollary_schedule_report(
    zs: ZeroSet,
    corollary: str,
    params: ScanParams,
    table: LambdaTable | None = None,
) -> ScanReport:
    """
    One row per (x, T): assumed-bound ratio, target(x) and, when x lies in
    the sieve range, R(x)/(√x·target(x)).

    Flags: `in_range` (W(x) <= T <= √x·log²x), `phase_safe` (log x <= 25,
    otherwise the F value is nan). Points with T outside [3, zs.t_max] are
    skipped.

    Raises:
        DomainError: unknown corollary
        EmptyGridError: no feasible (x, T) point
    """
    if corollary not in COROLLARIES:
        raise DomainError(f"unknown corollary {corollary!r}, expected one of {COROLLARIES}")
    beta, window, target = _setup(corollary, params)
    points = [(x, T) for T in params.Ts for x in params.xs if T_MIN <= T <= zs.t_max and x >= 1.0]
    skipped = len(params.xs) * len(params.Ts) - len(points)
    if skipped:
        log.warning("%s: %d grid points outside the zero set or domain skipped", corollary, skipped)
    if not points:
        raise EmptyGridError(f"{corollary}: no feasible (x, T) point")

    def run(point: tuple[float, float]) -> dict:
        x, T = point
        log_x = math.log(x)
        phase_safe = log_x <= LOG_X_CAP
        b = float(beta(T))
        if phase_safe:
            ev = f_direct(zs, x, T, b)
            value, ratio = ev.value, _ratio(corollary, ev.value, x, T, ev.count)
        else:
            value = ratio = float("nan")
        tgt = target(x) if x > math.e else float("nan")
        r_norm = float("nan")
        if table is not None and 2.0 <= x <= table.n_max and math.isfinite(tgt) and tgt > 0.0:
            r_norm = (psi(x, table) - x) / (math.sqrt(x) * tgt)
        in_range = bool(
            x > math.e and float(window.log_window(x)) <= math.log(T) and T <= math.sqrt(x) * log_x**2
        )
        return {
            "corollary": corollary,
            "x": x,
            "T": T,
            "beta": b,
            "F": value,
            "ratio": ratio,
            "target": tgt,
            "r_normalized": r_norm,
            "in_range": in_range,
            "phase_safe": phase_safe,
            "t_max": zs.t_max,
        }

    rows = _map(run, points, params.workers)
    report = ScanReport(
        corollary,
        rows,
        metadata={
            "zeros": zs.provenance(),
            "params": params.describe(),
            "beta": beta.describe(),
            "window": window.describe(),
            "exploratory": corollary == "cor3",
            "sieve_n_max": table.n_max if table is not None else None,
        },
    )
    report.record(max_ratio=report.column_max("ratio"), max_r_normalized=report.column_max("r_normalized"))
    log.info("%s report: %d points, max ratio %.6g", corollary, len(rows), report.metadata["max_ratio"])
    return report


__all__ = ["ScanParams", "corollary_schedule_report"]

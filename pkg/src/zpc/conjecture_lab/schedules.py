"""
Parameter schedules of the pair correlation conjectures.

    β(T)  BetaSchedule    constant | (log T)^{3-2a} | log³T/(A⁴(log log 2T)²) | (log T)^e
    𝓛(T)  EllSchedule     log T | p·log T | (log T)^e
    W(x)  WindowSchedule  (log x)^A | exp((log x)^{a/2}) | exp((log x)^{3/4})

and the dyadic aggregate M(x) = Σ_{1<=k<=k2} sqrt(𝓛(2^k)/β(2^k)) with k2 the
dyadic exponent of Y(x) = 3·√x·log²(2x).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np
from scipy.optimize import brentq

from src.zpc.errors import DomainError, ScheduleDomainError
from src.zpc.explicit_formula import default_height, dyadic_exponent
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.summation import KahanSum
from src.zpc.report import ScanReport

from .constants import (BETA_KINDS, COR1_A_MAX, DEFAULT_COR1_A,
                        DEFAULT_COR3_A, DEFAULT_LOGX_POWER, DEFAULT_WINDOW_A,
                        ELL_KINDS, M_X_MIN, SCHEDULE_T_MIN, WINDOW_KINDS)

log = get_logger(__name__)


def _heights(T) -> np.ndarray:
    arr = np.asarray(T, dtype=np.float64)
    if arr.size and float(arr.min()) < SCHEDULE_T_MIN:
        raise ScheduleDomainError(f"schedules are defined for T >= {SCHEDULE_T_MIN:g}, got {float(arr.min())!r}")
    return arr


def _out(values: np.ndarray):
    return float(values) if np.ndim(values) == 0 else values


@dataclass(frozen=True)
class BetaSchedule:
    """
    β(T) for the conjectures.

    Attributes:
        kind: "constant", "cor1_power", "cor3_gm" or "log_power"
        a: exponent parameter of cor1_power, 0 < a <= 3/2
        A: constant of cor3_gm, A > 1
        c: value of the constant kind
        exponent: e of log_power, β = (log T)^e with e >= 0
    """

    kind: str = "constant"
    a: float = DEFAULT_COR1_A
    A: float = DEFAULT_COR3_A
    c: float = 1.0
    exponent: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in BETA_KINDS:
            raise ScheduleDomainError(f"unknown beta schedule {self.kind!r}")
        if self.kind == "cor1_power" and not (0.0 < self.a <= COR1_A_MAX):
            raise ScheduleDomainError(f"cor1_power needs 0 < a <= {COR1_A_MAX:g}, got {self.a!r}")
        if self.kind == "cor3_gm" and not self.A > 1.0:
            raise ScheduleDomainError(f"cor3_gm needs A > 1, got {self.A!r}")
        if self.kind == "constant" and not self.c > 0.0:
            raise ScheduleDomainError(f"constant beta must be positive, got {self.c!r}")
        if self.kind == "log_power" and not self.exponent >= 0.0:
            raise ScheduleDomainError(f"log_power needs exponent >= 0, got {self.exponent!r}")

    def raw(self, T):
        """The defining formula, without the floor β >= 1 of cor3_gm."""
        T = _heights(T)
        log_t = np.log(T)
        if self.kind == "constant":
            return _out(np.full_like(T, self.c))
        if self.kind == "cor1_power":
            return _out(log_t ** (3.0 - 2.0 * self.a))
        if self.kind == "log_power":
            return _out(log_t**self.exponent)
        return _out(log_t**3 / (self.A**4 * np.log(np.log(2.0 * T)) ** 2))

    def __call__(self, T):
        values = np.asarray(self.raw(T))
        if self.kind == "cor3_gm":
            values = np.maximum(values, 1.0)
        return _out(values)

    def threshold(self) -> float:
        """
        T₀ from which the defining formula is >= 1 (and non-decreasing).

        3 for the power kinds and for constants c >= 1; inf for constants c < 1.
        """
        if self.kind == "constant":
            return SCHEDULE_T_MIN if self.c >= 1.0 else math.inf
        if self.kind in ("cor1_power", "log_power") or self.raw(SCHEDULE_T_MIN) >= 1.0:
            return SCHEDULE_T_MIN

        def excess(s: float) -> float:
            return s**3 / (self.A**4 * math.log(math.log(2.0) + s) ** 2) - 1.0

        lo = math.log(SCHEDULE_T_MIN)
        hi = 2.0 * lo
        while excess(hi) < 0.0:
            hi *= 2.0
        return math.exp(brentq(excess, lo, hi, xtol=1e-14))

    def describe(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class EllSchedule:
    """
    𝓛(T).

    Attributes:
        kind: "logT", "logx_proxy" (p·log T, x ≈ T^p) or "custom_power"
        exponent: e of custom_power, 𝓛 = (log T)^e
        power: p of logx_proxy
    """

    kind: str = "logT"
    exponent: float = 1.0
    power: float = DEFAULT_LOGX_POWER

    def __post_init__(self) -> None:
        if self.kind not in ELL_KINDS:
            raise ScheduleDomainError(f"unknown L schedule {self.kind!r}")
        if self.kind == "custom_power" and not self.exponent > 0.0:
            raise ScheduleDomainError(f"custom_power needs a positive exponent, got {self.exponent!r}")
        if self.kind == "logx_proxy" and not self.power > 0.0:
            raise ScheduleDomainError(f"logx_proxy needs a positive power, got {self.power!r}")

    def __call__(self, T):
        log_t = np.log(_heights(T))
        if self.kind == "logT":
            return _out(log_t)
        if self.kind == "logx_proxy":
            return _out(self.power * log_t)
        return _out(log_t**self.exponent)

    def describe(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class WindowSchedule:
    """
    Lower cut W(x) of the zero sum.

    Attributes:
        kind: "log_power" ((log x)^A), "cor1_exp" (exp((log x)^{a/2})) or
            "cor2_exp" (exp((log x)^{3/4}))
        A: exponent of log_power
        a: exponent parameter of cor1_exp
    """

    kind: str = "log_power"
    A: float = DEFAULT_WINDOW_A
    a: float = DEFAULT_COR1_A

    def __post_init__(self) -> None:
        if self.kind not in WINDOW_KINDS:
            raise ScheduleDomainError(f"unknown window schedule {self.kind!r}")
        if not (self.A > 0.0 and self.a > 0.0):
            raise ScheduleDomainError("window parameters must be positive")

    def log_window(self, x):
        """log W(x)."""
        arr = np.asarray(x, dtype=np.float64)
        if arr.size and float(arr.min()) <= math.e:
            raise ScheduleDomainError(f"W(x) needs x > e, got {float(arr.min())!r}")
        log_x = np.log(arr)
        if self.kind == "log_power":
            return _out(self.A * np.log(log_x))
        if self.kind == "cor1_exp":
            return _out(log_x ** (0.5 * self.a))
        return _out(log_x**0.75)

    def __call__(self, x):
        return _out(np.exp(np.asarray(self.log_window(x))))

    def describe(self) -> dict:
        return asdict(self)


def dyadic_heights(x: float) -> np.ndarray:
    """max(2^k, 3) for k = 1..k2, k2 the dyadic exponent of 3·√x·log²(2x)."""
    k2 = dyadic_exponent(default_height(x))
    return np.maximum(np.ldexp(1.0, np.arange(1, k2 + 1)), SCHEDULE_T_MIN)


def m_of_x(x: float, ell: EllSchedule, beta: BetaSchedule) -> float:
    """
    M(x) = Σ_{k=1}^{k2} sqrt(𝓛(2^k)/β(2^k)), heights below 3 raised to 3.

    Raises:
        DomainError: x < 16
        ScheduleDomainError: β(2^k) < 1 for some k in range
    """
    x = float(x)
    if not x >= M_X_MIN:
        raise DomainError(f"M(x) needs x >= {M_X_MIN:g}, got {x!r}")
    heights = dyadic_heights(x)
    betas = np.asarray(beta(heights))
    low = np.flatnonzero(betas < 1.0)
    if low.size:
        k = int(low[0]) + 1
        raise ScheduleDomainError(f"beta(2^{k}) = {betas[low[0]]!r} < 1")
    acc = KahanSum()
    acc.extend(np.sqrt(np.asarray(ell(heights)) / betas).tolist())
    return acc.value


def theorem1_bound(x: float, ell: EllSchedule, beta: BetaSchedule, window: WindowSchedule) -> float:
    """M(x) + log²W(x)."""
    log_w = float(window.log_window(x))
    return m_of_x(x, ell, beta) + log_w * log_w


def schedule_sandwich(ell: EllSchedule, beta: BetaSchedule, Ts: Iterable[float]) -> ScanReport:
    """
    Rows (T, L, beta, L/log T, L/(β log²T)) checking log T ≪ 𝓛(T) ≪ β(T) log²T.

    The extreme ratios and whether β stayed >= 1 and non-decreasing along
    the grid are recorded.
    """
    heights = np.sort(_heights(np.asarray(list(Ts), dtype=np.float64)))
    ells = np.asarray(ell(heights))
    betas = np.asarray(beta(heights))
    log_t = np.log(heights)
    lower = ells / log_t
    upper = ells / (betas * log_t**2)
    rows = [
        {"T": float(T), "L": float(l), "beta": float(b), "L_over_logT": float(lo), "L_over_beta_log2T": float(up)}
        for T, l, b, lo, up in zip(heights, ells, betas, lower, upper)
    ]
    report = ScanReport(
        "schedule_sandwich",
        rows,
        metadata={"ell": ell.describe(), "beta": beta.describe(), "beta_threshold": beta.threshold()},
    )
    report.record(
        min_lower_ratio=float(lower.min()),
        max_upper_ratio=float(upper.max()),
        beta_at_least_one=bool(np.all(betas >= 1.0)),
        beta_non_decreasing=bool(np.all(np.diff(betas) >= -1e-12 * np.abs(betas[1:]))),
    )
    return report


__all__ = [
    "BetaSchedule",
    "EllSchedule",
    "WindowSchedule",
    "dyadic_heights",
    "m_of_x",
    "theorem1_bound",
    "schedule_sandwich",
]

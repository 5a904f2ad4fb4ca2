"""
Prime number theorem error terms from a sieved LambdaTable.

    ψ(x) = Σ_{n<=x} Λ(n)         R(x) = ψ(x) − x
    π(x) = #{p <= x}             P(x) = π(x) − li(x),  li(x) = ∫_2^x dt/log t

Step functions are right-continuous: ψ(x) = psi_prefix[⌊x⌋].
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np
from scipy import integrate, special

from src.zpc.errors import ConvergenceError, DomainError, RangeError
from src.zpc.logging_setup import get_logger
from src.zpc.report import ScanReport

from .constants import (LI_ABS_TOL, LI_LOWER, LI_QUAD_LIMIT, LI_REL_TOL,
                        RTOP_MIN_X, VON_KOCH_C)
from .sieve import LambdaTable

log = get_logger(__name__)

_EXPI_LOWER = float(special.expi(math.log(LI_LOWER)))


@dataclass(frozen=True)
class PntErrors:
    """
    ψ, π and li at x with their error terms.

    Attributes:
        x: evaluation point
        psi: ψ(x)
        r: R(x) = psi − x
        pi: π(x)
        li: li(x)
        p: P(x) = pi − li
    """

    x: float
    psi: float
    r: float
    pi: int
    li: float
    p: float

    def as_row(self) -> dict:
        return asdict(self)


def _check_range(x: float, table: LambdaTable, lower: float = 2.0) -> float:
    x = float(x)
    if not (lower <= x <= table.n_max):
        raise RangeError(f"x={x!r} outside [{lower:g}, {table.n_max}]")
    return x


def psi(x: float, table: LambdaTable) -> float:
    """ψ(x) = psi_prefix[⌊x⌋] for 2 <= x <= n_max."""
    x = _check_range(x, table)
    return float(table.psi_prefix[int(math.floor(x))])


def pi_count(x: float, table: LambdaTable) -> int:
    """Number of primes <= x."""
    x = _check_range(x, table)
    return int(np.searchsorted(table.primes, math.floor(x), side="right"))


def li(x: float) -> float:
    """
    Logarithmic integral with lower limit 2, by adaptive Gauss–Kronrod
    quadrature (absolute tolerance 1e-9).

    Raises:
        DomainError: x < 2
        ConvergenceError: quadrature error estimate far above tolerance
    """
    x = float(x)
    if not x >= LI_LOWER:
        raise DomainError(f"li needs x >= {LI_LOWER:g}, got {x!r}")
    if x == LI_LOWER:
        return 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(
            lambda t: 1.0 / math.log(t),
            LI_LOWER,
            x,
            epsabs=LI_ABS_TOL,
            epsrel=LI_REL_TOL,
            limit=LI_QUAD_LIMIT,
        )
    if err > max(1e3 * LI_ABS_TOL, 1e-10 * abs(value)):
        raise ConvergenceError(f"li({x!r}): quadrature error estimate {err:.3e}")
    return float(value)


def li_many(xs) -> np.ndarray:
    """Vectorised li(x) = Ei(log x) − Ei(log 2)."""
    arr = np.asarray(xs, dtype=np.float64)
    if arr.size and float(arr.min()) < LI_LOWER:
        raise DomainError(f"li needs x >= {LI_LOWER:g}, got {float(arr.min())!r}")
    return special.expi(np.log(arr)) - _EXPI_LOWER


def pnt_errors(x: float, table: LambdaTable) -> PntErrors:
    x = _check_range(x, table)
    psi_x = psi(x, table)
    pi_x = pi_count(x, table)
    li_x = li(x)
    return PntErrors(x=x, psi=psi_x, r=psi_x - x, pi=pi_x, li=li_x, p=pi_x - li_x)


def _residual(errors: PntErrors) -> float:
    lx = math.log(errors.x)
    sx = math.sqrt(errors.x)
    return (errors.p - errors.r / lx + sx / lx) * lx * lx / sx


def rtop_residual(x: float, table: LambdaTable) -> float:
    """
    (P(x) − R(x)/log x + √x/log x) · log²x / √x, the normalised remainder of
    the transfer from R to P, for 100 <= x <= n_max.
    """
    x = _check_range(x, table, lower=RTOP_MIN_X)
    return _residual(pnt_errors(x, table))


def pnt_report(xs: Iterable[float], table: LambdaTable) -> ScanReport:
    """
    Rows (x, psi, r, pi, li, p, residual); residual is nan below x = 100.
    """
    rows = []
    for x in xs:
        errors = pnt_errors(x, table)
        row = errors.as_row()
        row["residual"] = _residual(errors) if errors.x >= RTOP_MIN_X else float("nan")
        rows.append(row)
    report = ScanReport("pnt", rows, metadata={"sieve_n_max": table.n_max})
    report.record(max_abs_residual=_abs_max(report.column("residual")))
    return report


def _abs_max(values: np.ndarray) -> float:
    finite = np.abs(values[np.isfinite(values)])
    return float(finite.max()) if finite.size else float("nan")


def von_koch_report(table: LambdaTable, x_max: int | None = None) -> ScanReport:
    """
    Empirical check |R(n)| <= 2·√n·log²n over the integers 2 <= n <= x_max.

    One row per decade [10^k, 10^(k+1)) with the largest ratio
    |R(n)|/(√n·log²n) found there; the overall maximum, where it occurs and
    whether the bound held everywhere are recorded in the metadata.
    """
    x_max = table.n_max if x_max is None else int(x_max)
    _check_range(x_max, table)
    n = np.arange(2, x_max + 1, dtype=np.int64)
    nf = n.astype(np.float64)
    r = table.psi_prefix[2 : x_max + 1] - nf
    ratios = np.abs(r) / (np.sqrt(nf) * np.log(nf) ** 2)

    rows = []
    lo = 1
    while lo <= x_max:
        hi = lo * 10
        mask = (n >= lo) & (n < hi)
        if np.any(mask):
            idx = np.flatnonzero(mask)
            top = idx[int(np.argmax(ratios[idx]))]
            rows.append(
                {
                    "decade_start": int(lo),
                    "decade_stop": int(min(hi - 1, x_max)),
                    "max_ratio": float(ratios[top]),
                    "argmax": int(n[top]),
                    "r_at_argmax": float(r[top]),
                }
            )
        lo = hi

    top = int(np.argmax(ratios))
    report = ScanReport("von_koch", rows, metadata={"sieve_n_max": table.n_max})
    report.record(
        x_max=int(x_max),
        max_ratio=float(ratios[top]),
        max_ratio_x=int(n[top]),
        bound_constant=VON_KOCH_C,
        bound_holds=bool(ratios[top] <= VON_KOCH_C),
    )
    log.info("von Koch scan to %d: max ratio %.4f at x=%d", x_max, ratios[top], n[top])
    return report


__all__ = [
    "PntErrors",
    "psi",
    "pi_count",
    "li",
    "li_many",
    "pnt_errors",
    "rtop_residual",
    "pnt_report",
    "von_koch_report",
]

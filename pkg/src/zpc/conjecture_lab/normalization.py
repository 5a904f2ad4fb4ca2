"""
Probabilistic normalization of the PNT error term:
R(x) / (√x·(log log log x)²), whose limsup is conjectured to be 1/2π.
"""

from __future__ import annotations

import math
from typing import Iterable

from src.zpc.errors import RangeError
from src.zpc.logging_setup import get_logger
from src.zpc.prime_arith import LambdaTable, psi
from src.zpc.report import ScanReport

from .constants import NORMALIZATION_X_MIN

log = get_logger(__name__)


def guess_normalization(x_list: Iterable[float], table: LambdaTable) -> ScanReport:
    """
    Rows (x, r, normalization, value) for 100 <= x <= n_max.

    The maximum value and the number of sign changes of R along the scan
    are recorded; nothing is compared with 1/2π.
    """
    rows = []
    for x in x_list:
        x = float(x)
        if not NORMALIZATION_X_MIN <= x <= table.n_max:
            raise RangeError(f"x={x!r} outside [{NORMALIZATION_X_MIN:g}, {table.n_max}]")
        r = psi(x, table) - x
        norm = math.sqrt(x) * math.log(math.log(math.log(x))) ** 2
        rows.append({"x": x, "r": r, "normalization": norm, "value": r / norm})
    report = ScanReport("normalization", rows, metadata={"sieve_n_max": table.n_max})
    report.record(
        max_value=report.column_max("value"),
        r_sign_changes=report.sign_changes("r"),
        reference_limsup=1.0 / (2.0 * math.pi),
    )
    log.info("normalization scan: %d points, max %.6g", len(rows), report.metadata["max_value"])
    return report


__all__ = ["guess_normalization"]

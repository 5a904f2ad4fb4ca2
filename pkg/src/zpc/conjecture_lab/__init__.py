"""Conjecture lab subpackage: schedules β, 𝓛, W, the aggregate M(x), conjecture statistics and corollary scans."""

from __future__ import annotations

from src.zpc.report import ScanReport

from . import constants
from .corollaries import ScanParams, corollary_schedule_report
from .normalization import guess_normalization
from .schedules import (BetaSchedule, EllSchedule, WindowSchedule,
                        dyadic_heights, m_of_x, schedule_sandwich,
                        theorem1_bound)
from .statistics import (conjecture1_report, conjecture2_report,
                         conjecture2_stat, v_grid)

__all__ = [
    "constants",
    "ScanReport",
    "BetaSchedule",
    "EllSchedule",
    "WindowSchedule",
    "dyadic_heights",
    "m_of_x",
    "theorem1_bound",
    "schedule_sandwich",
    "conjecture2_stat",
    "conjecture2_report",
    "conjecture1_report",
    "v_grid",
    "ScanParams",
    "corollary_schedule_report",
    "guess_normalization",
]

"""Prime arithmetic subpackage: sieve of Λ, ψ/π/li error terms, second moment J(x, h)."""

from __future__ import annotations

from . import constants
from .moments import j_ratio, j_second_moment
from .pnt import (PntErrors, li, li_many, pi_count, pnt_errors, pnt_report,
                  psi, rtop_residual, von_koch_report)
from .sieve import LambdaTable, sieve_lambda, simple_sieve

__all__ = [
    "constants",
    "LambdaTable",
    "sieve_lambda",
    "simple_sieve",
    "PntErrors",
    "psi",
    "pi_count",
    "li",
    "li_many",
    "pnt_errors",
    "rtop_residual",
    "pnt_report",
    "von_koch_report",
    "j_second_moment",
    "j_ratio",
]

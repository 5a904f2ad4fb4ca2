"""Explicit formula subpackage: truncated ψ, zero sums for R(x), dyadic blocks and the block bound."""

from __future__ import annotations

from . import constants
from .dyadic import BlockSum, block_sum, dyadic_blocks, dyadic_exponent
from .lemma1 import (explicit_report, lemma1_detail, lemma1_ratio,
                     lemma1_report, truncation_report)
from .truncated import (default_height, lower_order_terms, reciprocal_sums,
                        truncated_psi, zero_sum_r)

__all__ = [
    "constants",
    "BlockSum",
    "block_sum",
    "dyadic_blocks",
    "dyadic_exponent",
    "truncated_psi",
    "zero_sum_r",
    "reciprocal_sums",
    "default_height",
    "lower_order_terms",
    "lemma1_detail",
    "lemma1_ratio",
    "lemma1_report",
    "truncation_report",
    "explicit_report",
]

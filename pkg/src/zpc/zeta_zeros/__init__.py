"""Zeta zeros subpackage: Riemann–Siegel Z, zero finding, ZeroSet tables and counting."""

from __future__ import annotations

from . import constants
from .counting import density_report, n_formula, n_of_t
from .finder import find_zeros
from .riemann_siegel import (gram_spacing, grid_step, hardy_z, precise_z,
                             riemann_siegel_theta, scan_z)
from .zero_set import (ZeroSet, deserialize, ingest_file, ingest_zeros,
                       load_cache, save_cache, serialize)

__all__ = [
    "constants",
    "ZeroSet",
    "riemann_siegel_theta",
    "hardy_z",
    "scan_z",
    "precise_z",
    "gram_spacing",
    "grid_step",
    "find_zeros",
    "ingest_zeros",
    "ingest_file",
    "serialize",
    "deserialize",
    "save_cache",
    "load_cache",
    "n_of_t",
    "n_formula",
    "density_report",
]

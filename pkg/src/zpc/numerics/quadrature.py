"""
Composite Gauss–Legendre quadrature with node doubling.

API:
    gauss_nodes(a, b, panel_width, order) -> (nodes, weights)
    gauss_integrate(func, a, b, panel_width, order) -> float
    gauss_doubling(func, a, b, panel_width, atol, rtol, ...) -> QuadratureResult

`func` is vectorised: it receives a 1-D array of nodes and returns the
integrand values at those nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from src.zpc.errors import ConvergenceError
from src.zpc.logging_setup import get_logger

from .constants import GAUSS_ORDER, MAX_DOUBLING_LEVELS, NODE_BATCH
from .summation import pairwise_kahan_sum

log = get_logger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    nodes: int
    levels: int


def gauss_nodes(
    a: float, b: float, panel_width: float, order: int = GAUSS_ORDER
) -> tuple[np.ndarray, np.ndarray]:
    """
    Nodes and weights of the composite rule on [a, b].

    The interval is cut into ceil((b - a) / panel_width) equal panels, each
    carrying an `order`-point Gauss–Legendre rule mapped from [-1, 1].
    """
    n_panels = max(1, int(math.ceil((b - a) / panel_width)))
    edges = np.linspace(a, b, n_panels + 1)
    y, w = leggauss(order)  # Interval [-1, 1]
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * y[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def gauss_integrate(
    func: Integrand,
    a: float,
    b: float,
    panel_width: float,
    order: int = GAUSS_ORDER,
) -> tuple[float, int]:
    """
    Apply the composite rule once; returns (estimate, node count).
    """
    if b <= a:
        return 0.0, 0
    nodes, weights = gauss_nodes(a, b, panel_width, order)
    step = NODE_BATCH * order
    products = np.empty_like(nodes)
    for start in range(0, nodes.size, step):
        stop = min(start + step, nodes.size)
        products[start:stop] = weights[start:stop] * func(nodes[start:stop])
    return pairwise_kahan_sum(products), int(nodes.size)


def gauss_doubling(
    func: Integrand,
    a: float,
    b: float,
    panel_width: float,
    *,
    atol: float = 0.0,
    rtol: float = 1e-12,
    order: int = GAUSS_ORDER,
    max_levels: int = MAX_DOUBLING_LEVELS,
    label: str = "integral",
) -> QuadratureResult:
    """
    Halve the panel width until two successive estimates agree.

    Args:
        func: vectorised integrand
        a, b: bounds
        panel_width: initial panel width
        atol, rtol: stop when |I_k - I_{k-1}| <= max(atol, rtol * |I_k|)
        order: Gauss points per panel
        max_levels: number of halvings allowed
        label: name used in log messages and errors

    Returns:
        QuadratureResult(value, error, nodes, levels)

    Raises:
        ConvergenceError: if the estimates still disagree after max_levels
    """
    width = float(panel_width)
    previous, used = gauss_integrate(func, a, b, width, order)
    for level in range(1, max_levels + 1):
        width *= 0.5
        current, used = gauss_integrate(func, a, b, width, order)
        diff = abs(current - previous)
        if diff <= max(atol, rtol * abs(current)):
            log.debug("%s: %d nodes, level %d, diff=%.3e", label, used, level, diff)
            return QuadratureResult(value=current, error=diff, nodes=used, levels=level)
        log.debug("%s: level %d not converged (diff=%.3e)", label, level, diff)
        previous = current
    raise ConvergenceError(
        f"{label}: no convergence after {max_levels} halvings (last diff {diff:.3e})"
    )


__all__ = ["QuadratureResult", "gauss_nodes", "gauss_integrate", "gauss_doubling"]

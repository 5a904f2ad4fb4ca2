"""
Dyadic decomposition of Σ_{W<γ<=Y} x^{iγ}/γ into blocks (2^{k-1}, 2^k].

k1 and k2 satisfy 2^{k1-1} < W <= 2^{k1} and 2^{k2-1} < Y <= 2^{k2}; the
first and last blocks are cut at W and Y.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from src.zpc.logging_setup import get_logger
from src.zpc.numerics.phase import unit_phasors
from src.zpc.numerics.summation import complex_kahan_sum
from src.zpc.zeta_zeros import ZeroSet

from .truncated import check_window

log = get_logger(__name__)


@dataclass(frozen=True)
class BlockSum:
    """
    Zero sums over s < γ <= t at a fixed x.

    Attributes:
        x: point
        s, t: block bounds
        k: dyadic index (block inside (2^{k-1}, 2^k])
        value: Σ x^{iγ}
        weighted: Σ x^{iγ}/γ
        prefix_max: max over the block of |partial sums of x^{iγ}|
        count: number of ordinates in the block
    """

    x: float
    s: float
    t: float
    k: int
    value: complex
    weighted: complex
    prefix_max: float
    count: int

    def as_row(self) -> dict:
        return {
            "x": self.x,
            "k": self.k,
            "s": self.s,
            "t": self.t,
            "count": self.count,
            "value_abs": abs(self.value),
            "weighted_re": self.weighted.real,
            "weighted_im": self.weighted.imag,
            "prefix_max": self.prefix_max,
        }


def dyadic_exponent(y: float) -> int:
    """The k with 2^{k-1} < y <= 2^k, exactly."""
    mantissa, exponent = math.frexp(y)
    return exponent - 1 if mantissa == 0.5 else exponent


def block_sum(x: float, s: float, t: float, k: int, zs: ZeroSet) -> BlockSum:
    gammas = zs.between(s, t)
    if gammas.size == 0:
        return BlockSum(float(x), s, t, k, 0j, 0j, 0.0, 0)
    cos_g, sin_g = unit_phasors(gammas, math.log(x))
    phasors = cos_g + 1j * sin_g
    partial = np.cumsum(phasors)
    return BlockSum(
        x=float(x),
        s=s,
        t=t,
        k=k,
        value=complex_kahan_sum(phasors),
        weighted=complex_kahan_sum(phasors / gammas),
        prefix_max=float(np.max(np.abs(partial))),
        count=int(gammas.size),
    )


def dyadic_blocks(x: float, W: float, Y: float, zs: ZeroSet, *, workers: int = 1) -> list[BlockSum]:
    """
    Block sums covering (W, Y], in increasing k.

    Args:
        x: point (x > 1)
        W, Y: 14 <= W <= Y <= zs.t_max
        zs: zero set
        workers: threads used for the blocks

    Returns:
        list of BlockSum, one per k in [k1, k2] with a non-empty interval
    """
    W, Y = check_window(W, Y, zs)
    k1, k2 = dyadic_exponent(W), dyadic_exponent(Y)
    bounds = []
    for k in range(k1, k2 + 1):
        s = max(math.ldexp(1.0, k - 1), W)
        t = min(math.ldexp(1.0, k), Y)
        if s < t:
            bounds.append((s, t, k))

    def run(bound: tuple[float, float, int]) -> BlockSum:
        return block_sum(x, bound[0], bound[1], bound[2], zs)

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(run, bounds))
    else:
        blocks = [run(b) for b in bounds]
    log.debug("dyadic blocks x=%g (W=%g, Y=%g): k=%d..%d, %d blocks", x, W, Y, k1, k2, len(blocks))
    return blocks


__all__ = ["BlockSum", "dyadic_exponent", "block_sum", "dyadic_blocks"]

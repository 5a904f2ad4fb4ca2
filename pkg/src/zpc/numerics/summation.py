"""
Compensated summation.

Error-free transformations (two_sum, two_prod) and the accumulators built on
them. Every reduction here runs in a fixed index order, so results are
bit-identical from one run to the next.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .constants import SPLITTER, SUM_BLOCK


def two_sum(a, b):
    """
    Knuth's TwoSum: s + e == a + b exactly, with s = fl(a + b).

    Works elementwise on numpy arrays as well as on floats.
    """
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _split(a):
    c = SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    """
    Dekker's TwoProduct: p + e == a * b exactly, with p = fl(a * b).

    Args:
        a, b: floats or broadcastable float64 arrays

    Returns:
        (p, e) with the rounded product and its exact rounding error
    """
    p = a * b
    a_hi, a_lo = _split(a)
    b_hi, b_lo = _split(b)
    e = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, e


class KahanSum:
    """
    Running compensated sum (Neumaier's variant of Kahan summation).

    >>> acc = KahanSum()
    >>> acc.extend([1e16, 1.0, -1e16])
    >>> acc.value
    1.0
    """

    __slots__ = ("_sum", "_comp")

    def __init__(self, start: float = 0.0) -> None:
        self._sum = float(start)
        self._comp = 0.0

    def add(self, value: float) -> None:
        value = float(value)
        total = self._sum + value
        if abs(self._sum) >= abs(value):
            self._comp += (self._sum - total) + value
        else:
            self._comp += (value - total) + self._sum
        self._sum = total

    def extend(self, values: Iterable[float]) -> None:
        for v in values:
            self.add(v)

    @property
    def value(self) -> float:
        return self._sum + self._comp

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return f"KahanSum({self.value!r})"


def pairwise_kahan_sum(values, block: int = SUM_BLOCK) -> float:
    """
    Sum of a real array: numpy pairwise summation inside fixed-size blocks,
    Neumaier accumulation of the block totals in index order.
    """
    arr = np.asarray(values, dtype=np.float64).ravel()
    n = arr.size
    if n == 0:
        return 0.0
    if n <= block:
        return float(np.sum(arr))
    full = (n // block) * block
    partials = np.sum(arr[:full].reshape(-1, block), axis=1)
    acc = KahanSum()
    acc.extend(partials.tolist())
    if full < n:
        acc.add(float(np.sum(arr[full:])))
    return acc.value


def complex_kahan_sum(values, block: int = SUM_BLOCK) -> complex:
    arr = np.asarray(values, dtype=np.complex128)
    return complex(pairwise_kahan_sum(arr.real, block), pairwise_kahan_sum(arr.imag, block))


def compensated_cumsum(values, block: int = SUM_BLOCK) -> np.ndarray:
    """
    Prefix sums with a compensated carry between blocks.

    Within a block the running sum is numpy's sequential cumsum; the offset
    carried into each block is the compensated total of all previous blocks,
    so the drift stays bounded by one block's rounding error.
    """
    arr = np.asarray(values, dtype=np.float64).ravel()
    out = np.empty_like(arr)
    carry = KahanSum()
    for start in range(0, arr.size, block):
        chunk = arr[start : start + block]
        out[start : start + chunk.size] = carry.value + np.cumsum(chunk)
        carry.add(float(np.sum(chunk)))
    return out


__all__ = [
    "two_sum",
    "two_prod",
    "KahanSum",
    "pairwise_kahan_sum",
    "complex_kahan_sum",
    "compensated_cumsum",
]

"""
Segmented sieve of the von Mangoldt function.

Λ(n) = log p when n = p^k, else 0. Primality is sieved segment by segment
(2**20 integers per segment) with the base primes up to √n_max; prime powers
p^k with k >= 2 are filled afterwards from the base primes. Segments are
independent and may run on a thread pool; they are merged in index order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from src.zpc.errors import CapacityError, DomainError
from src.zpc.logging_setup import get_logger
from src.zpc.numerics.summation import compensated_cumsum

from .constants import SEGMENT_SIZE, SIEVE_CAPACITY, SIEVE_MIN

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class LambdaTable:
    """
    Sieved Λ(n) for 0 <= n <= n_max with cumulative ψ.

    Attributes:
        n_max: largest sieved integer
        lam: Λ(n), index n (lam[0] = lam[1] = 0)
        psi_prefix: ψ(n) = Σ_{m<=n} Λ(m), index n
        primes: the primes <= n_max, ascending
    """

    n_max: int
    lam: np.ndarray
    psi_prefix: np.ndarray
    primes: np.ndarray

    def __post_init__(self) -> None:
        for name in ("lam", "psi_prefix", "primes"):
            getattr(self, name).setflags(write=False)

    def lambda_at(self, n: int) -> float:
        return float(self.lam[n])


def simple_sieve(limit: int) -> np.ndarray:
    """Primes <= limit by the plain sieve of Eratosthenes."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _segment_primes(lo: int, hi: int, base_primes: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi)."""
    is_prime = np.ones(hi - lo, dtype=bool)
    if lo < 2:
        is_prime[: 2 - lo] = False
    for p in base_primes:
        p = int(p)
        if p * p >= hi:
            break
        first = max(p * p, ((lo + p - 1) // p) * p)
        is_prime[first - lo :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64) + lo


def sieve_lambda(n_max: int, *, workers: int = 1) -> LambdaTable:
    """
    Sieve Λ(n) up to n_max and accumulate ψ with compensated prefix sums.

    Args:
        n_max: 2 <= n_max <= 1e8
        workers: threads used for the segments

    Returns:
        LambdaTable

    Raises:
        DomainError: n_max < 2
        CapacityError: n_max > 1e8
    """
    n_max = int(n_max)
    if n_max < SIEVE_MIN:
        raise DomainError(f"n_max must be >= {SIEVE_MIN}, got {n_max}")
    if n_max > SIEVE_CAPACITY:
        raise CapacityError(f"n_max={n_max} exceeds sieve capacity {SIEVE_CAPACITY}")

    base_primes = simple_sieve(math.isqrt(n_max))
    bounds = [(lo, min(lo + SEGMENT_SIZE, n_max + 1)) for lo in range(0, n_max + 1, SEGMENT_SIZE)]
    log.info("Sieving Λ up to %d: %d segments, workers=%d", n_max, len(bounds), workers)

    def run(bound: tuple[int, int]) -> np.ndarray:
        return _segment_primes(bound[0], bound[1], base_primes)

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, bounds))
    else:
        parts = [run(b) for b in bounds]
    primes = np.concatenate(parts)

    lam = np.zeros(n_max + 1, dtype=np.float64)
    lam[primes] = np.log(primes.astype(np.float64))
    for p in base_primes:
        p = int(p)
        log_p = math.log(p)
        power = p * p
        while power <= n_max:
            lam[power] = log_p
            power *= p

    psi_prefix = compensated_cumsum(lam, block=SEGMENT_SIZE)
    log.info("Sieve done: %d primes, psi(%d)=%.6f", primes.size, n_max, psi_prefix[-1])
    return LambdaTable(n_max=n_max, lam=lam, psi_prefix=psi_prefix, primes=primes)


__all__ = ["LambdaTable", "simple_sieve", "sieve_lambda"]

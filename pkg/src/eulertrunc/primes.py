"""Prime sieving and elementary prime sums.

A PrimeTable is built once and shared read-only by every module that
needs primes: it is immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InsufficientTableError
from .summation import csum

SEGMENTED_ABOVE = 10**7
SEGMENT_SIZE = 1 << 21


def _simple_sieve(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _segmented_sieve(limit: int) -> np.ndarray:
    root = math.isqrt(limit)
    base = _simple_sieve(root)
    chunks = [base]
    lo = root + 1
    while lo <= limit:
        hi = min(lo + SEGMENT_SIZE, limit + 1)
        mask = np.ones(hi - lo, dtype=bool)
        for p in base:
            start = ((lo + p - 1) // p) * p
            mask[start - lo:: p] = False
        chunks.append(np.flatnonzero(mask).astype(np.int64) + lo)
        lo = hi
    return np.concatenate(chunks)


@dataclass(frozen=True)
class PrimeTable:
    """All primes <= limit, ascending, with cached natural logs."""

    limit: int
    primes: np.ndarray
    log_p: np.ndarray

    def upto(self, x: float) -> np.ndarray:
        """View of the primes p <= x.  Raises if x exceeds the table."""
        if x > self.limit:
            raise InsufficientTableError(
                f"need primes up to {x}, table stops at {self.limit}")
        n = int(np.searchsorted(self.primes, math.floor(x), side="right"))
        return self.primes[:n]

    def count(self, x: float) -> int:
        return int(self.upto(x).size)


def sieve_primes(limit: int) -> PrimeTable:
    """Sieve of Eratosthenes; segmented above 10^7 to bound memory."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    limit = int(limit)
    if limit <= SEGMENTED_ABOVE:
        primes = _simple_sieve(limit)
    else:
        primes = _segmented_sieve(limit)
    return PrimeTable(limit=limit, primes=primes,
                      log_p=np.log(primes.astype(float)))


def mertens_sum(x: float, table: PrimeTable) -> float:
    """Sum of 1/p over primes p <= x, compensated accumulation."""
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    ps = table.upto(x)
    return csum(1.0 / ps.astype(float))


def chebyshev_sum(x: float, table: PrimeTable) -> float:
    """Sum of log p over primes p <= x, compensated accumulation."""
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    n = table.upto(x).size
    return csum(table.log_p[:n])


def is_prime(n: int) -> bool:
    """Deterministic trial division; adequate for the sizes used here."""
    if n < 2:
        return False
    for p in (2, 3):
        if n % p == 0:
            return n == p
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def mobius_upto(n: int) -> np.ndarray:
    """mu(0..n) by sieving; mu[0] is set to 0."""
    mu = np.ones(n + 1, dtype=np.int64)
    mu[0] = 0
    primes = _simple_sieve(n) if n >= 2 else np.array([], dtype=np.int64)
    for p in primes:
        mu[p:: p] *= -1
        sq = p * p
        if sq <= n:
            mu[sq:: sq] = 0
    return mu

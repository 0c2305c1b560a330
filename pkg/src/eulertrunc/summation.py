"""Compensated accumulation for long, slowly decaying series.

Sums of up to ~10^7 terms appear in the prime sums; plain left-to-right
accumulation would drift by ~n*eps relative to the largest term.  `csum`
is exactly rounded (Shewchuk partials via math.fsum), chunked so that
large numpy arrays never have to be materialised as one Python list.
"""

import math

import numpy as np

_CHUNK = 1 << 20


def csum(values) -> float:
    """Exactly rounded sum of a 1-d real array."""
    a = np.asarray(values, dtype=float).ravel()
    if a.size <= _CHUNK:
        return math.fsum(a.tolist())
    partials = []
    for lo in range(0, a.size, _CHUNK):
        partials.append(math.fsum(a[lo:lo + _CHUNK].tolist()))
    return math.fsum(partials)


def csum_complex(values) -> complex:
    """Exactly rounded sum of a 1-d complex array (real/imag separately)."""
    a = np.asarray(values, dtype=complex).ravel()
    return complex(csum(a.real), csum(a.imag))

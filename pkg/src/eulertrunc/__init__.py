"""Truncated Euler products for L-functions at and near s = 1.

Building blocks: prime tables, exact Dirichlet characters, an exact
L-value oracle with branch-tracked logarithms, truncated/smoothed
Euler-product quantities, Mellin-transform identity checks, and a
sweep harness that measures the approximation errors over conductor
ranges.
"""

from .primes import PrimeTable, sieve_primes, mertens_sum, chebyshev_sum
from .characters import (CharacterGroup, DirichletCharacter, build_group,
                         enumerate_primitive, count_primitive)
from .errors import (InsufficientTableError, ParameterWindowError, PoleError,
                     BranchTrackingError)

__version__ = "0.1.0"

__all__ = [
    "PrimeTable", "sieve_primes", "mertens_sum", "chebyshev_sum",
    "CharacterGroup", "DirichletCharacter", "build_group",
    "enumerate_primitive", "count_primitive",
    "InsufficientTableError", "ParameterWindowError", "PoleError",
    "BranchTrackingError",
]

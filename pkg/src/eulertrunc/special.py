"""Special functions: digamma, Hurwitz zeta, and the complex Gamma function.

Everything is implemented twice over the same core: a scalar API with
domain validation, and vectorised internals reused by the batched
L-value kernels.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import PoleError

EULER_GAMMA = 0.5772156649015328606

# B_{2j} / (2j)! for j = 1..7, the Euler-Maclaurin correction weights
_BERN_FACT = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
)

# B_{2j} / (2j) for j = 1..7, the digamma asymptotic weights
_BERN_2J = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def digamma_vec(x) -> np.ndarray:
    """psi(x) for a positive real array; abs error well below 1e-12."""
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    y = x.copy()
    # raise the argument to >= 10 by the recurrence psi(y+1) = psi(y) + 1/y
    for _ in range(10):
        small = y < 10.0
        if not small.any():
            break
        acc -= np.where(small, 1.0 / np.where(small, y, 1.0), 0.0)
        y = np.where(small, y + 1.0, y)
    out = np.log(y) - 0.5 / y
    r = 1.0 / (y * y)
    pw = r.copy()
    for b in _BERN_2J:
        out -= b * pw
        pw *= r
    return out + acc


def digamma(x: float) -> float:
    """psi(x) for real x > 0."""
    if x <= 0:
        raise PoleError(f"digamma requires x > 0, got {x}")
    return float(digamma_vec(np.array([x]))[0])


def hurwitz_zeta_vec(s: float, a) -> np.ndarray:
    """zeta(s, a) for an array of a > 0, real s != 1 (Euler-Maclaurin)."""
    a = np.asarray(a, dtype=float)
    # shift count: the asymptotic tail needs a + M comfortably above
    # max(13, s) for the Bernoulli corrections to converge fast
    M = max(12, int(math.ceil(max(13.0, s + 1.0) - float(np.min(a)))))
    k = np.arange(M, dtype=float)
    base = a[..., None] + k
    acc = np.sum(base**(-s), axis=-1)
    w = a + M
    acc += w**(1.0 - s) / (s - 1.0) + 0.5 * w**(-s)
    rising = s
    pw = w**(-s - 1.0)
    for j, b in enumerate(_BERN_FACT, start=1):
        acc += b * rising * pw
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        pw *= 1.0 / (w * w)
    return acc


def hurwitz_zeta(s: float, a: float) -> float:
    """Hurwitz zeta zeta(s, a) for real s != 1, a > 0."""
    if s == 1:
        raise PoleError("hurwitz_zeta has a pole at s = 1")
    if a <= 0:
        raise ValueError(f"hurwitz_zeta requires a > 0, got {a}")
    return float(hurwitz_zeta_vec(s, np.array([a]))[0])


def riemann_zeta(s: float) -> float:
    """zeta(s) for real s != 1."""
    return hurwitz_zeta(s, 1.0)


# ----------------------------------------------------------------------
# complex Gamma via the Lanczos rational approximation (g = 7, n = 9)

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


def _log_gamma_right(z: np.ndarray) -> np.ndarray:
    """log Gamma on Re z >= 0.5 (no poles there)."""
    acc = np.full_like(z, _LANCZOS[0])
    for k, c in enumerate(_LANCZOS[1:], start=1):
        acc = acc + c / (z - 1.0 + k)
    t = z + (_LANCZOS_G - 0.5)
    return _LOG_SQRT_2PI + (z - 0.5) * np.log(t) - t + np.log(acc)


def _log_sin_pi(z: np.ndarray) -> np.ndarray:
    """A branch of log sin(pi z), stable for large |Im z|.

    Only used under exp() later, so the 2*pi*i*k ambiguity is harmless.
    """
    zu = np.where(z.imag >= 0, z, z.conj())
    w = np.pi * zu
    # sin w = exp(-i w) (exp(2 i w) - 1) / (2 i); |exp(2iw)| <= 1 here
    val = -1j * w + np.log(np.expm1(2j * w)) - np.log(2j)
    return np.where(z.imag >= 0, val, val.conj())


def log_gamma(z) -> np.ndarray:
    """A branch of log Gamma(z), vectorised; exact under exp()."""
    z = np.asarray(z, dtype=complex)
    refl = z.real < 0.5
    zz = np.where(refl, 1.0 - z, z)
    lg = _log_gamma_right(zz)
    if refl.any():
        lg = np.where(refl, _LOG_PI - _log_sin_pi(z) - lg, lg)
    return lg


def complex_gamma(z) -> complex:
    """Gamma(z) for complex z away from the poles 0, -1, -2, ..."""
    zc = complex(z)
    if zc.imag == 0 and zc.real <= 0 and zc.real == int(zc.real):
        raise PoleError(f"Gamma pole at z = {zc}")
    return complex(np.exp(log_gamma(zc)))


def gamma_grid(z: np.ndarray) -> np.ndarray:
    """Gamma(z) over an array (no pole checks; used by quadratures)."""
    return np.exp(log_gamma(z))

"""Exact evaluation of L(s, chi) and branch-tracked log L for real s near 1.

Ground truth for every approximation check: values come from finite
combinations of Hurwitz zetas (s != 1) or digamma values (s = 1), never
from Euler-product truncations.  The logarithm branch is the one defined
by the absolutely convergent prime-power series for sigma > 1, anchored
at sigma = 3 and continued along the real axis.

Per-modulus tables are built once and shared read-only; the digamma and
Hurwitz passes are batched over all residues, so evaluating every
character mod q costs O(q) special-function work plus one group FFT.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .characters import CharacterGroup, DirichletCharacter
from .errors import BranchTrackingError, PoleError
from .special import _BERN_FACT, digamma_vec

ZERO_ON_PATH = 1e-6
_KERNEL_M = 12
_SERIES_SIGMA = 12.0  # above this, the prime-power series is cheaper and exact


@lru_cache(maxsize=256)
def digamma_table(q: int) -> np.ndarray:
    """psi(a/q) for a = 1..q-1 (index a-1), one batched pass per modulus."""
    a = np.arange(1, q, dtype=float)
    return digamma_vec(a / q)


def l_series_kernel(a: np.ndarray, q: int, s: float) -> np.ndarray:
    """Weights k(a) with L(s, chi) = sum_a chi(a) k(a), real s != 1.

    k(a) = q^{-s} zeta(s, a/q) assembled without forming the huge
    intermediate zeta values, so no overflow for large s.
    """
    a = np.asarray(a, dtype=float)
    ks = np.arange(_KERNEL_M, dtype=float)
    base = a[:, None] + q * ks[None, :]
    acc = np.sum(base**(-s), axis=1)
    w = a + q * _KERNEL_M
    acc += w**(1.0 - s) / (q * (s - 1.0)) + 0.5 * w**(-s)
    rising = s
    pw = w**(-s - 1.0) * q
    qw2 = (q / w)**2
    for j, b in enumerate(_BERN_FACT, start=1):
        acc += b * rising * pw
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        pw *= qw2
    return acc


def _log_l_series_tables(group: CharacterGroup, s: float,
                         tol: float = 1e-15) -> np.ndarray:
    """log L(s, chi) for every chi mod q via the prime-power series.

    Only for large s where the series over p^l <= (1/tol)^(1/s) has a
    handful of terms; returns the series branch directly (principal
    character included).
    """
    q = group.q
    cut = (1.0 / tol)**(1.0 / s)
    weights = np.zeros(group.phi, dtype=float)
    cidx = group.coprime_index
    p = 2
    while p <= cut:
        is_p = all(p % r for r in range(2, int(math.isqrt(p)) + 1))
        if is_p:
            pk = p
            ell = 1
            while pk <= cut:
                j = cidx[pk % q] if q > 1 else 0
                if j >= 0:
                    weights[j] += 1.0 / (ell * pk**s)
                pk *= p
                ell += 1
        p += 1
    return group.dual_sums(weights)


def l_values_table(group: CharacterGroup, s: float) -> np.ndarray:
    """L(s, chi) for every chi mod q at once (real s != 1).

    The principal-character entry equals zeta(s) * prod_{p|q} (1 - p^-s)
    by analytic continuation of the finite Hurwitz combination.
    """
    if s == 1:
        raise PoleError("use l_values_at_1_table for s = 1")
    ker = l_series_kernel(group.coprime_residues, group.q, s)
    return group.dual_sums(ker)


def l_values_at_1_table(group: CharacterGroup) -> np.ndarray:
    """L(1, chi) for every chi mod q (principal entry is meaningless)."""
    q = group.q
    if q == 1:
        return np.array([complex("nan")])
    psi = digamma_table(q)[group.coprime_residues - 1]
    return -group.dual_sums(psi) / q


@dataclass
class LValueRecord:
    """One character's L-value with method tag and error estimate."""

    character: dict
    s: float
    L: complex
    logL: complex | None
    method: str
    est_error: float

    def to_json_dict(self) -> dict:
        d = {
            "character": self.character,
            "s": self.s,
            "L": [self.L.real, self.L.imag],
            "method": self.method,
            "est_error": self.est_error,
        }
        if self.logL is not None:
            d["logL"] = [self.logL.real, self.logL.imag]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _require_non_principal(chi: DirichletCharacter):
    if chi.is_principal():
        raise PoleError(
            "L(s) for the principal character carries the zeta pole factor; "
            "not a valid oracle input")


def l_value_at_1(chi: DirichletCharacter) -> LValueRecord:
    """L(1, chi) from the digamma closed form, exact to ~1e-12."""
    _require_non_principal(chi)
    q = chi.q
    psi = digamma_table(q)[chi.group.coprime_residues - 1]
    L = complex(-np.sum(chi.values_on_coprime() * psi) / q)
    return LValueRecord(character=chi.to_json_dict(), s=1.0, L=L, logL=None,
                        method="digamma", est_error=1e-12 * max(1.0, abs(L)))


def l_value(s: float, chi: DirichletCharacter) -> LValueRecord:
    """L(s, chi) for real s in (0.5, 4]; s = 1 delegates to the digamma form."""
    if not 0.5 < s <= 4.0:
        raise ValueError(f"s must lie in (0.5, 4], got {s}")
    if s == 1.0:
        return l_value_at_1(chi)
    _require_non_principal(chi)
    ker = l_series_kernel(chi.group.coprime_residues, chi.q, s)
    L = complex(np.sum(chi.values_on_coprime() * ker))
    return LValueRecord(character=chi.to_json_dict(), s=float(s), L=L,
                        logL=None, method="hurwitz",
                        est_error=1e-12 * max(1.0, abs(L)))


def _l_at(chi: DirichletCharacter, s: float) -> complex:
    return l_value(s, chi).L if s != 3.0 else l_value(3.0, chi).L


def log_l_continued(s: float, chi: DirichletCharacter,
                    zero_threshold: float = ZERO_ON_PATH) -> complex:
    """Branch of log L(s, chi) continued along [s, 3] from sigma = 3.

    At sigma = 3 the prime-power series branch coincides with the
    principal logarithm (|Im| <= log zeta(3) < pi), so the walk anchors
    there and steps down, halving the step until the argument moves by
    less than pi/2 per step.
    """
    if not 0.8 < s <= 4.0:
        raise ValueError(f"s must lie in (0.8, 4], got {s}")
    _require_non_principal(chi)
    anchor = 3.0
    if s >= anchor:
        L = l_value(s, chi).L
        return complex(np.log(L))

    cur_s = anchor
    cur_L = l_value(anchor, chi).L
    phase = float(np.angle(cur_L))
    step = 0.25
    min_step = 1e-5
    while cur_s > s:
        if abs(cur_L) < zero_threshold:
            raise BranchTrackingError(
                f"|L({cur_s}, chi)| = {abs(cur_L):.3g} < {zero_threshold}; "
                "branch tracking unsafe (near-zero on path)")
        nxt_s = max(s, cur_s - step)
        nxt_L = l_value(nxt_s, chi).L if nxt_s != 1.0 else l_value_at_1(chi).L
        dphi = float(np.angle(nxt_L / cur_L))
        if abs(dphi) >= math.pi / 2:
            step /= 2.0
            if step < min_step:
                raise BranchTrackingError(
                    f"argument of L moves too fast near sigma = {cur_s}")
            continue
        phase += dphi
        cur_s, cur_L = nxt_s, nxt_L
        step = min(step * 1.5, 0.25)
    if abs(cur_L) < zero_threshold:
        raise BranchTrackingError(
            f"|L({s}, chi)| = {abs(cur_L):.3g} < {zero_threshold}")
    return complex(math.log(abs(cur_L)), phase)


def _walk_grid(s: float) -> list[float]:
    """Descending sigma grid from 3 down to s for the vectorised walk."""
    base = [3.0, 2.5, 2.0, 1.75, 1.5, 1.35, 1.2, 1.1, 1.05, 1.0]
    grid = [x for x in base if x > s + 1e-12]
    if s < 1.0:
        x = 0.95
        while x > s + 1e-12:
            grid.append(round(x, 6))
            x -= 0.05
    grid.append(float(s))
    return grid


@dataclass
class LogLTable:
    """Vectorised branch-tracked logs for every character mod q."""

    values: np.ndarray      # L(s, chi) by flat character index
    logs: np.ndarray        # branch-tracked log L(s, chi)
    excluded: np.ndarray    # bool: branch failure or near-zero on path


def log_l_table(group: CharacterGroup, s: float,
                zero_threshold: float = ZERO_ON_PATH,
                max_extra_points: int = 60) -> LogLTable:
    """Branch-tracked log L(s, chi) for all chi mod q at once.

    Same continuation contract as log_l_continued, but the grid is
    shared across characters: steps on which any character's argument
    moves by >= pi/2 are bisected globally; characters still failing
    after refinement (or with |L| below the near-zero threshold) are
    flagged excluded rather than guessed.
    """
    if group.q == 1:
        nanv = np.array([complex("nan")])
        return LogLTable(values=nanv, logs=nanv.copy(),
                         excluded=np.array([True]))
    grid = _walk_grid(s)
    tables: dict[float, np.ndarray] = {}

    def table_at(sig: float) -> np.ndarray:
        if sig not in tables:
            tables[sig] = (l_values_at_1_table(group) if sig == 1.0
                           else l_values_table(group, sig))
        return tables[sig]

    extra = 0
    while True:
        bad_steps = []
        prev = table_at(grid[0])
        phase = np.angle(prev)
        ok = np.ones(group.phi, dtype=bool)
        near_zero = np.abs(prev) < zero_threshold
        for i, sig in enumerate(grid[1:], start=1):
            cur = table_at(sig)
            with np.errstate(divide="ignore", invalid="ignore"):
                dphi = np.angle(cur / prev)
            viol = np.abs(dphi) >= math.pi / 2
            viol[0] = False  # principal entry never branch-tracked
            if viol.any():
                bad_steps.append(i)
                ok &= ~viol
            phase = phase + dphi
            near_zero |= np.abs(cur) < zero_threshold
            prev = cur
        if not bad_steps or extra >= max_extra_points:
            break
        refined = list(grid)
        for i in reversed(bad_steps):
            mid = 0.5 * (grid[i - 1] + grid[i])
            refined.insert(i, mid)
            extra += 1
        grid = refined

    vals = table_at(grid[-1])
    excluded = (~ok) | near_zero
    logs = np.log(np.abs(vals)) + 1j * phase
    return LogLTable(values=vals, logs=logs, excluded=excluded)

"""Exact Dirichlet character arithmetic on (Z/qZ)^*.

Characters are stored as exponent vectors on a fixed set of cyclic
generators: one generator per odd prime-power factor of q, the pair
(-1, 5) for a factor 2^k with k >= 3, the single generator 3 for a
factor 4, and nothing for a factor 2.  Every character value is an
exact root of unity exp(2*pi*i*k/D) with integer k and D the group
exponent; values are looked up in a single root-of-unity table per D,
never accumulated by repeated complex multiplication, so no phase
drift builds up across millions of evaluations.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

DLOG_TABLE_MAX = 10**6


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation by trial division, ascending primes."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _primitive_root_mod_p(p: int) -> int:
    """Smallest primitive root mod an odd prime p."""
    if p == 2:
        return 1
    part = [r for r, _ in factorize(p - 1)]
    g = 2
    while True:
        if all(pow(g, (p - 1) // r, p) != 1 for r in part):
            return g
        g += 1


def _primitive_root_mod_pk(p: int, k: int) -> int:
    """Primitive root mod p^k for odd p (lifted from mod p)."""
    g = _primitive_root_mod_p(p)
    if k == 1:
        return g
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _bsgs_dlog(a: int, g: int, order: int, mod: int) -> int:
    """Baby-step giant-step discrete log of a to base g mod `mod`."""
    m = math.isqrt(order) + 1
    baby = {}
    x = 1
    for j in range(m):
        baby.setdefault(x, j)
        x = (x * g) % mod
    ginv_m = pow(g, (order - m) % order, mod)
    x = a % mod
    for i in range(m):
        j = baby.get(x)
        if j is not None:
            return (i * m + j) % order
        x = (x * ginv_m) % mod
    raise ArithmeticError(f"no discrete log of {a} base {g} mod {mod}")


class LocalPart:
    """Cyclic decomposition of (Z/p^k Z)^* with discrete-log lookup.

    `orders` has one entry per cyclic component (two for 2^k, k>=3).
    For moduli up to DLOG_TABLE_MAX the discrete logs are a full lookup
    array (-1 rows mark non-coprime residues); above that they are
    solved on demand by baby-step giant-step.
    """

    __slots__ = ("prime", "exp", "pk", "generators", "orders", "table")

    def __init__(self, prime: int, exp: int):
        self.prime = prime
        self.exp = exp
        pk = prime**exp
        self.pk = pk
        if prime == 2:
            if exp == 1:
                self.generators = ()
                self.orders = ()
            elif exp == 2:
                self.generators = (3,)
                self.orders = (2,)
            else:
                self.generators = (pk - 1, 5)
                self.orders = (2, pk // 4)
        else:
            g = _primitive_root_mod_pk(prime, exp)
            self.generators = (g,)
            self.orders = (pk - pk // prime,)
        self.table = self._build_table() if pk <= DLOG_TABLE_MAX else None

    def _build_table(self):
        t = len(self.orders)
        if t == 0:  # pk == 2, trivial unit group
            return np.zeros((self.pk, 0), dtype=np.int64)
        tbl = np.full((self.pk, t), -1, dtype=np.int64)
        if t == 1:
            g, d = self.generators[0], self.orders[0]
            x = 1
            for k in range(d):
                tbl[x, 0] = k
                x = (x * g) % self.pk
        else:
            d1 = self.orders[1]
            for a0 in (0, 1):
                x = (self.pk - 1) % self.pk if a0 else 1
                for k in range(d1):
                    tbl[x, 0] = a0
                    tbl[x, 1] = k
                    x = (x * 5) % self.pk
        return tbl

    def dlog(self, a: int):
        """Exponent vector of a on this part's generators, or None."""
        a = a % self.pk
        if math.gcd(a, self.pk) != 1:
            return None
        if not self.orders:
            return ()
        if self.table is not None:
            row = self.table[a]
            return tuple(int(v) for v in row)
        if self.prime == 2:
            a0 = 0 if a % 4 == 1 else 1
            b = a if a0 == 0 else (-a) % self.pk
            return (a0, _bsgs_dlog(b, 5, self.orders[1], self.pk))
        return (_bsgs_dlog(a, self.generators[0], self.orders[0], self.pk),)


@lru_cache(maxsize=64)
def roots_of_unity(D: int) -> np.ndarray:
    """Table of exp(2*pi*i*k/D), k = 0..D-1."""
    return np.exp(2j * np.pi * np.arange(D) / D)


class CharacterGroup:
    """The character group of (Z/qZ)^*, with vectorised bulk queries."""

    def __init__(self, q: int):
        if q < 1:
            raise ValueError(f"modulus must be >= 1, got {q}")
        self.q = int(q)
        self.factorization = factorize(self.q) if self.q > 1 else []
        self.parts = [LocalPart(p, e) for p, e in self.factorization]
        self.orders = tuple(d for part in self.parts for d in part.orders)
        self.phi = 1
        for d in self.orders:
            self.phi *= d
        self.exponent = math.lcm(*self.orders) if self.orders else 1
        self.n_components = len(self.orders)
        self._cache = {}

    # ------------------------------------------------------------------
    # residues and discrete logs

    def dlog(self, n: int):
        """Concatenated exponent vector of n, or None if gcd(n, q) > 1."""
        if self.q == 1:
            return ()
        if math.gcd(n % self.q, self.q) != 1:
            return None
        out = []
        for part in self.parts:
            out.extend(part.dlog(n))
        return tuple(out)

    def _cached(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    @property
    def coprime_residues(self) -> np.ndarray:
        """Ascending residues a in [1, q] with gcd(a, q) = 1 (q=1 -> [1])."""
        def build():
            if self.q == 1:
                return np.array([1], dtype=np.int64)
            a = np.arange(self.q, dtype=np.int64)
            mask = np.ones(self.q, dtype=bool)
            for p, _ in self.factorization:
                mask[::p] = False
            mask[0] = False
            return a[mask]
        return self._cached("coprime", build)

    @property
    def coprime_index(self) -> np.ndarray:
        """Residue -> position in coprime_residues, -1 when not coprime."""
        def build():
            idx = np.full(self.q if self.q > 1 else 2, -1, dtype=np.int64)
            idx[self.coprime_residues % self.q] = np.arange(self.phi)
            return idx
        return self._cached("coprime_index", build)

    @property
    def dlog_matrix(self) -> np.ndarray:
        """(phi, n_components) discrete logs of the coprime residues."""
        def build():
            m = np.empty((self.phi, self.n_components), dtype=np.int64)
            for i, a in enumerate(self.coprime_residues):
                m[i] = self.dlog(int(a))
            return m
        return self._cached("dlog_matrix", build)

    @property
    def grid_position(self) -> np.ndarray:
        """Flat index of each coprime residue's dlog vector in the grid."""
        def build():
            if not self.orders:
                return np.zeros(1, dtype=np.int64)
            return np.ravel_multi_index(self.dlog_matrix.T, self.orders)
        return self._cached("grid_position", build)

    # ------------------------------------------------------------------
    # characters

    def character(self, exponents) -> "DirichletCharacter":
        return DirichletCharacter(self, exponents)

    def character_from_index(self, index: int) -> "DirichletCharacter":
        if not self.orders:
            return DirichletCharacter(self, ())
        e = np.unravel_index(index, self.orders)
        return DirichletCharacter(self, tuple(int(v) for v in e))

    def characters(self):
        """All phi(q) characters mod q in flat-index order."""
        for idx in range(self.phi):
            yield self.character_from_index(idx)

    def principal(self) -> "DirichletCharacter":
        return DirichletCharacter(self, (0,) * self.n_components)

    # ------------------------------------------------------------------
    # dual transform

    def dual_sums(self, f_on_coprime) -> np.ndarray:
        """sum_a chi(a) f(a) for every character chi at once.

        `f_on_coprime` is aligned with coprime_residues.  The result is
        indexed by flat character index; it is exact to FFT rounding
        because the group is a product of cyclic components.
        """
        f = np.asarray(f_on_coprime, dtype=complex)
        if not self.orders:
            return f.copy().reshape(1)
        grid = np.zeros(self.orders, dtype=complex)
        grid.ravel()[self.grid_position] = f
        return (np.fft.ifftn(grid) * self.phi).ravel()

    # ------------------------------------------------------------------
    # vectorised per-character data

    @property
    def exponent_grids(self) -> list[np.ndarray]:
        """Flat arrays E_i with the i-th exponent of every character."""
        def build():
            if not self.orders:
                return []
            idx = np.indices(self.orders)
            return [idx[i].ravel() for i in range(self.n_components)]
        return self._cached("exponent_grids", build)

    def conductor_grid(self) -> np.ndarray:
        """Conductor of every character mod q, by flat index."""
        def build():
            out = np.ones(self.phi, dtype=np.int64)
            grids = self.exponent_grids
            pos = 0
            for part in self.parts:
                t = len(part.orders)
                if t == 0:
                    continue
                if part.prime == 2 and part.exp >= 3:
                    a0, a1 = grids[pos], grids[pos + 1]
                    v = np.zeros_like(a1)
                    nz = a1 != 0
                    # v2(a1) for the nonzero entries
                    vv = a1[nz]
                    val = np.zeros_like(vv)
                    while True:
                        even = vv % 2 == 0
                        if not even.any():
                            break
                        vv = np.where(even, vv // 2, vv)
                        val += even
                    v[nz] = val
                    contrib = np.where(nz, 2**(part.exp - v),
                                       np.where(a0 != 0, 4, 1))
                else:
                    a = grids[pos]
                    e = part.exp
                    v = np.zeros_like(a)
                    nz = a != 0
                    vv = a[nz]
                    val = np.zeros_like(vv)
                    while True:
                        div = vv % part.prime == 0
                        if not div.any():
                            break
                        vv = np.where(div, vv // part.prime, vv)
                        val += div
                    v[nz] = val
                    contrib = np.where(nz, part.prime**(e - v), 1)
                out *= contrib
                pos += t
            return out
        return self._cached("conductor_grid", build)

    def order_grid(self) -> np.ndarray:
        """Multiplicative order of every character, by flat index."""
        def build():
            out = np.ones(self.phi, dtype=np.int64)
            for E, d in zip(self.exponent_grids, self.orders):
                out = np.lcm(out, d // np.gcd(E, d))
            return out
        return self._cached("order_grid", build)

    def parity_grid(self) -> np.ndarray:
        """chi(-1) for every character: +1 (even) or -1 (odd)."""
        def build():
            if self.q <= 2:
                return np.ones(self.phi, dtype=np.int64)
            lm1 = self.dlog(self.q - 1)
            bit = np.zeros(self.phi, dtype=np.int64)
            for E, d, l in zip(self.exponent_grids, self.orders, lm1):
                if 2 * l == d:
                    bit += E
            return np.where(bit % 2 == 0, 1, -1).astype(np.int64)
        return self._cached("parity_grid", build)

    def primitive_mask(self) -> np.ndarray:
        return self.conductor_grid() == self.q

    def __repr__(self):
        return f"CharacterGroup(q={self.q}, orders={self.orders})"


class DirichletCharacter:
    """One Dirichlet character mod q, as exponents on the group generators."""

    __slots__ = ("group", "exponents", "_weights", "_order", "_conductor",
                 "_parity")

    def __init__(self, group: CharacterGroup, exponents):
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != group.n_components:
            raise ValueError(
                f"expected {group.n_components} exponents, got {len(exponents)}")
        for e, d in zip(exponents, group.orders):
            if not 0 <= e < d:
                raise ValueError(f"exponent {e} out of range [0, {d})")
        self.group = group
        self.exponents = exponents
        D = group.exponent
        self._weights = np.array(
            [e * (D // d) for e, d in zip(exponents, group.orders)],
            dtype=np.int64)
        self._order = None
        self._conductor = None
        self._parity = None

    # ------------------------------------------------------------------
    @property
    def q(self) -> int:
        return self.group.q

    @property
    def index(self) -> int:
        """Canonical flat index of the exponent vector (C order)."""
        if not self.group.orders:
            return 0
        return int(np.ravel_multi_index(self.exponents, self.group.orders))

    def angle_index(self, n: int):
        """Integer k with chi(n) = exp(2*pi*i*k/D), or None if chi(n) = 0."""
        l = self.group.dlog(n)
        if l is None:
            return None
        D = self.group.exponent
        return int(sum(int(w) * li for w, li in zip(self._weights, l)) % D)

    def evaluate(self, n: int) -> complex:
        k = self.angle_index(n)
        if k is None:
            return 0j
        return complex(roots_of_unity(self.group.exponent)[k])

    __call__ = evaluate

    def values_on_coprime(self) -> np.ndarray:
        """chi(a) for the ascending coprime residues a."""
        D = self.group.exponent
        k = (self.group.dlog_matrix @ self._weights) % D
        return roots_of_unity(D)[k]

    def values_block(self, ns) -> np.ndarray:
        """Vectorised chi(n) over an integer array (0 on gcd(n,q) > 1)."""
        ns = np.asarray(ns, dtype=np.int64)
        q = self.q
        if q == 1:
            return np.ones(ns.shape, dtype=complex)
        a = ns % q
        cidx = self.group.coprime_index[a]
        ok = cidx >= 0
        out = np.zeros(ns.shape, dtype=complex)
        D = self.group.exponent
        k = (self.group.dlog_matrix[cidx[ok]] @ self._weights) % D
        out[ok] = roots_of_unity(D)[k]
        return out

    def angle_block(self, ns):
        """(k, nonzero_mask): angle numerators mod D over an array."""
        ns = np.asarray(ns, dtype=np.int64)
        q = self.q
        if q == 1:
            return np.zeros(ns.shape, dtype=np.int64), np.ones(ns.shape, bool)
        a = ns % q
        cidx = self.group.coprime_index[a]
        ok = cidx >= 0
        k = np.zeros(ns.shape, dtype=np.int64)
        D = self.group.exponent
        k[ok] = (self.group.dlog_matrix[cidx[ok]] @ self._weights) % D
        return k, ok

    # ------------------------------------------------------------------
    def conjugate(self) -> "DirichletCharacter":
        e = tuple((-e) % d for e, d in zip(self.exponents, self.group.orders))
        return DirichletCharacter(self.group, e)

    def __pow__(self, n: int) -> "DirichletCharacter":
        e = tuple((e * n) % d for e, d in zip(self.exponents, self.group.orders))
        return DirichletCharacter(self.group, e)

    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def order(self) -> int:
        if self._order is None:
            o = 1
            for e, d in zip(self.exponents, self.group.orders):
                o = math.lcm(o, d // math.gcd(e, d))
            self._order = o
        return self._order

    @property
    def conductor(self) -> int:
        """Smallest f | q such that chi is trivial on units = 1 mod f.

        Tested divisor by divisor in ascending order; the angle check is
        exact integer arithmetic, so the result carries no float risk.
        """
        if self._conductor is None:
            q = self.q
            for f in _divisors(q):
                ok = True
                for n in range(1, q + 1, f):
                    k = self.angle_index(n)
                    if k is not None and k != 0:
                        ok = False
                        break
                if ok:
                    self._conductor = f
                    break
        return self._conductor

    def is_primitive(self) -> bool:
        return self.conductor == self.q

    @property
    def parity(self) -> str:
        if self._parity is None:
            if self.q <= 2:
                self._parity = "even"
            else:
                k = self.angle_index(self.q - 1)
                self._parity = "even" if k == 0 else "odd"
        return self._parity

    # ------------------------------------------------------------------
    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "exponents": list(self.exponents),
            "conductor": self.conductor,
            "order": self.order,
            "parity": self.parity,
        }

    def __eq__(self, other):
        return (isinstance(other, DirichletCharacter)
                and self.q == other.q and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.q, self.exponents))

    def __repr__(self):
        return f"DirichletCharacter(q={self.q}, exponents={self.exponents})"


def build_group(q: int) -> CharacterGroup:
    """Group structure of (Z/qZ)^*; raises for q < 1."""
    return CharacterGroup(q)


def enumerate_primitive(Q: int):
    """Every primitive character of conductor q <= Q, exactly once,
    in nondecreasing conductor order."""
    if Q < 1:
        raise ValueError(f"Q must be >= 1, got {Q}")
    for q in range(1, Q + 1):
        if q % 4 == 2:
            continue  # twice-odd moduli carry no primitive character
        group = CharacterGroup(q)
        mask = group.primitive_mask()
        for flat in np.flatnonzero(mask):
            yield group.character_from_index(int(flat))


def count_primitive(Q: int) -> int:
    """Number of primitive characters of conductor <= Q (vectorised)."""
    if Q < 1:
        raise ValueError(f"Q must be >= 1, got {Q}")
    total = 0
    for q in range(1, Q + 1):
        if q % 4 == 2:
            continue
        total += int(CharacterGroup(q).primitive_mask().sum())
    return total

"""Exact truncated Dirichlet series and the coefficient formula for a_m^+.

A series is stored by its coefficients c_1..c_N; every operation is exact on
those N coefficients and nothing is assumed about the tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._arith import (check_square_unit, divisors, factorize, gcd_inf,
                     nu_p, square_unit_residues)
from .errors import DomainError, UsageError

__all__ = [
    "DirichletCoeffs", "SieveTables", "sieve_tables", "primes_upto", "dmul",
    "ddiv", "shift_scale", "count_squares", "count_squares_series", "X_func",
    "gcd_inf", "theorem11_coeffs", "F_mobius", "prop45_residual",
]


class DirichletCoeffs:
    """Coefficients c_1..c_N of sum c_m m^{-s}, held as exact Python numbers."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        vals = [int(v) if isinstance(v, np.integer) else v for v in coeffs]
        if not vals:
            raise DomainError("a truncated series needs limit >= 1")
        c = np.empty(len(vals) + 1, dtype=object)
        c[0] = 0
        c[1:] = vals
        self._c = c

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "DirichletCoeffs":
        obj = cls.__new__(cls)
        obj._c = arr
        return obj

    @classmethod
    def zeros(cls, N: int) -> "DirichletCoeffs":
        return cls([0] * N)

    @classmethod
    def identity(cls, N: int) -> "DirichletCoeffs":
        return cls.monomial(1, N)

    @classmethod
    def monomial(cls, k: int, N: int, coeff=1) -> "DirichletCoeffs":
        """coeff * k^{-s}."""
        out = cls.zeros(N)
        if k <= N:
            out._c[k] = coeff
        return out

    @classmethod
    def zeta(cls, N: int, shift: int = 0) -> "DirichletCoeffs":
        """zeta(s - shift): coefficients m**shift."""
        return cls([m**shift for m in range(1, N + 1)])

    @classmethod
    def from_function(cls, f, N: int) -> "DirichletCoeffs":
        return cls([f(m) for m in range(1, N + 1)])

    @property
    def limit(self) -> int:
        return len(self._c) - 1

    def __len__(self):
        return self.limit

    def __getitem__(self, m: int):
        if not 1 <= m <= self.limit:
            raise IndexError(f"coefficient index {m} outside 1..{self.limit}")
        return self._c[m]

    def tolist(self) -> list:
        return list(self._c[1:])

    def __iter__(self):
        return iter(self._c[1:])

    def _check(self, other):
        if not isinstance(other, DirichletCoeffs):
            return NotImplemented
        if other.limit != self.limit:
            raise UsageError(f"limit mismatch: {self.limit} vs {other.limit}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DirichletCoeffs._wrap(self._c + other._c)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DirichletCoeffs._wrap(self._c - other._c)

    def __neg__(self):
        return DirichletCoeffs._wrap(-self._c)

    def __mul__(self, other):
        if isinstance(other, DirichletCoeffs):
            return dmul(self, other)
        if isinstance(other, (int, Fraction)):
            return DirichletCoeffs._wrap(self._c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, DirichletCoeffs):
            return ddiv(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, DirichletCoeffs):
            return NotImplemented
        return self.limit == other.limit and bool(np.all(self._c == other._c))

    __hash__ = None

    def __repr__(self):
        head = ", ".join(str(x) for x in self._c[1:9])
        more = ", ..." if self.limit > 8 else ""
        return f"DirichletCoeffs(N={self.limit}: {head}{more})"


def dmul(x: DirichletCoeffs, y: DirichletCoeffs) -> DirichletCoeffs:
    """Dirichlet convolution truncated at the common limit."""
    x._check(y)
    N = x.limit
    out = np.zeros(N + 1, dtype=object)
    xc, yc = x._c, y._c
    for i in range(1, N + 1):
        xi = xc[i]
        if xi:
            k = N // i
            out[i::i] += xi * yc[1:k + 1]
    return DirichletCoeffs._wrap(out)


def ddiv(x: DirichletCoeffs, y: DirichletCoeffs) -> DirichletCoeffs:
    """q with q * y = x, for y_1 = +1 or -1."""
    x._check(y)
    y1 = y._c[1]
    if y1 not in (1, -1):
        raise DomainError(f"leading coefficient {y1} is not a unit")
    N = x.limit
    r = x._c.copy()
    q = np.zeros(N + 1, dtype=object)
    yc = y._c
    for i in range(1, N + 1):
        qi = r[i] * y1
        q[i] = qi
        if qi and 2 * i <= N:
            k = N // i
            r[2 * i::i] -= qi * yc[2:k + 1]
    return DirichletCoeffs._wrap(q)


def shift_scale(x: DirichletCoeffs, k: int) -> DirichletCoeffs:
    """Multiply by k^{-s}."""
    if k < 1:
        raise DomainError("scale factor must be positive")
    N = x.limit
    out = np.zeros(N + 1, dtype=object)
    j = N // k
    out[k::k] = x._c[1:j + 1]
    return DirichletCoeffs._wrap(out)


# -- sieve tables ------------------------------------------------------------

def primes_upto(P: int) -> np.ndarray:
    """All primes <= P, ascending, as int64."""
    if P < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(P + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(P) + 1):
        if is_p[p]:
            is_p[p * p::p] = False
    return np.flatnonzero(is_p).astype(np.int64)


@dataclass(frozen=True, eq=False)
class SieveTables:
    limit: int
    spf: np.ndarray
    mu: np.ndarray
    phi: np.ndarray
    sigma1: np.ndarray

    @property
    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.spf[2:] == np.arange(2, self.limit + 1)) + 2

    def factor(self, m: int) -> dict[int, int]:
        out: dict[int, int] = {}
        while m > 1:
            p = int(self.spf[m])
            m //= p
            out[p] = out.get(p, 0) + 1
        return out

    def nu_p(self, m: int, p: int) -> int:
        return self.factor(m).get(p, 0)


def sieve_tables(N: int) -> SieveTables:
    if N < 1:
        raise DomainError("sieve limit must be positive")
    spf = np.zeros(N + 1, dtype=np.int64)
    mu = np.ones(N + 1, dtype=np.int64)
    phi = np.arange(N + 1, dtype=np.int64)
    for p in primes_upto(N):
        p = int(p)
        blk = spf[p::p]
        blk[blk == 0] = p
        mu[p::p] *= -1
        mu[p * p::p * p] = 0
        phi[p::p] -= phi[p::p] // p
    sigma = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1):
        sigma[d::d] += d
    spf[1] = 1
    mu[0] = phi[0] = 0
    for arr in (spf, mu, phi, sigma):
        arr.setflags(write=False)
    return SieveTables(N, spf, mu, phi, sigma)


# -- the square-class counting functions -------------------------------------

def count_squares(b: int, m: int) -> int:
    """#{d^2 mod b : d | m, gcd(d, b) = 1}."""
    if b < 1 or m < 1:
        raise DomainError("b and m must be positive")
    return len({d * d % b for d in divisors(m) if math.gcd(d, b) == 1})


def X_func(b: int, t: int, m: int) -> int:
    """1 if some divisor d of m has d^2 = t mod b, else 0."""
    t = check_square_unit(b, t)
    if m < 1:
        raise DomainError("m must be positive")
    return int(any(d * d % b == t for d in divisors(m)))


@lru_cache(maxsize=None)
def _extend(reach: frozenset, u: int, e: int, b: int) -> frozenset:
    out = set(reach)
    step = set(reach)
    for _ in range(e):
        step = {r * u % b for r in step}
        out |= step
    return frozenset(out)


def count_squares_series(b: int, N: int, tables: SieveTables | None = None) -> DirichletCoeffs:
    """count_squares(b, m) for m = 1..N, built multiplicatively from a sieve."""
    if b < 1:
        raise DomainError("b must be positive")
    tables = tables if tables is not None and tables.limit >= N else sieve_tables(N)
    spf = tables.spf
    order = len(square_unit_residues(b))
    reach: list[frozenset] = [frozenset()] * (N + 1)
    reach[1] = frozenset({1 % b})
    counts = [0] * N
    counts[0] = 1
    for m in range(2, N + 1):
        p = int(spf[m])
        rest, e = m // p, 1
        while rest % p == 0:
            rest //= p
            e += 1
        if b % p == 0:
            reach[m] = reach[rest]
        else:
            reach[m] = _extend(reach[rest], p * p % b, min(e, order), b)
        counts[m - 1] = len(reach[m])
    return DirichletCoeffs(counts)


def theorem11_coeffs(B: int, N: int, tables: SieveTables | None = None) -> DirichletCoeffs:
    """a_m^+ for m <= N: (phi series) * sum_{b | B} (B/b)^{-s} (count_squares series)."""
    if B < 1 or N < 1:
        raise DomainError("B and N must be positive")
    tables = tables if tables is not None and tables.limit >= N else sieve_tables(N)
    phi = DirichletCoeffs([int(v) for v in tables.phi[1:N + 1]])
    total = DirichletCoeffs.zeros(N)
    for b in divisors(B):
        total = total + shift_scale(count_squares_series(b, N, tables), B // b)
    return dmul(phi, total)


# -- the local identity for the b-part ---------------------------------------

def F_mobius(b: int, s: float) -> float:
    """sum_{d | b} d^s mu(b/d)."""
    out = []
    for d in divisors(b):
        f = factorize(b // d)
        if any(e > 1 for e in f.values()):
            continue
        out.append((-1) ** len(f) * d**s)
    return math.fsum(out)


def _smooth_numbers(primes, K: int):
    nums = [1]
    for p in primes:
        nums = [n * p**k for n in nums for k in range(K.bit_length() + 1) if n * p**k <= K]
    return sorted(nums)


def prop45_residual(b: int, s: float, K: int) -> float:
    """|F(b,s) sum_{n | b^inf, n <= K} sigma_1(n) n^-s - b^s prod_{p | b} zeta_p(s-1)|.

    The dropped tail is at most sum_{n | b^inf, n > K} sigma_1(n) n^{-s}, which
    for s > 2 is O(K^{2-s} log(K)^{w-1}) with w the number of primes dividing b.
    """
    if s <= 2:
        raise DomainError("need s > 2")
    if b < 1 or K < b:
        raise DomainError("need b >= 1 and K >= b")
    primes = sorted(factorize(b))
    terms = []
    for n in _smooth_numbers(primes, K):
        sig = 1
        for p in primes:
            e = nu_p(n, p)
            sig *= (p ** (e + 1) - 1) // (p - 1)
        terms.append(sig * float(n) ** -s)
    lhs = F_mobius(b, s) * math.fsum(terms)
    rhs = float(b) ** s
    for p in primes:
        rhs /= 1.0 - float(p) ** (1.0 - s)
    return abs(lhs - rhs)

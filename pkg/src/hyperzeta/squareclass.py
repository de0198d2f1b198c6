"""Square classes of primes modulo b and the H_b(s) factor.

Primes coprime to b are grouped by p^2 mod b. Whether a target t is a square
of a divisor of m only depends on how many prime factors of m (with
multiplicity) fall in each group, which turns the counting series into a
finite weighted sum of Euler-product pieces.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ._arith import check_square_unit, divisors, factorize, square_unit_residues
from .dirichlet import DirichletCoeffs, primes_upto
from .errors import DomainError, UnsupportedError, UsageError

# Products of class primes are accumulated in extended precision.
_EXT = np.longdouble


@dataclass(frozen=True)
class SquareUnitGroup:
    b: int
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 1 % self.b

    def mul(self, x: int, y: int) -> int:
        return x * y % self.b

    def table(self) -> dict[tuple[int, int], int]:
        return {(x, y): self.mul(x, y) for x in self.elements for y in self.elements}

    def __contains__(self, t) -> bool:
        return t % self.b in self.elements


def square_units(b: int) -> SquareUnitGroup:
    return SquareUnitGroup(b, square_unit_residues(b))


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative integer weight per element of a square-unit group."""

    elements: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.elements) != len(self.weights):
            raise UsageError("one weight per group element is required")
        if any(w < 0 for w in self.weights):
            raise DomainError("weights must be nonnegative")

    @classmethod
    def of(cls, G: SquareUnitGroup, mapping: dict[int, int] | None = None) -> "WeightVector":
        mapping = {u % G.b: w for u, w in (mapping or {}).items()}
        extra = set(mapping) - set(G.elements)
        if extra:
            raise UsageError(f"{sorted(extra)} are not elements of U_{G.b}^2")
        return cls(G.elements, tuple(mapping.get(u, 0) for u in G.elements))

    def __getitem__(self, u: int) -> int:
        return self.weights[self.elements.index(u)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.elements, self.weights))

    def capped(self, cap: int) -> "WeightVector":
        return WeightVector(self.elements, tuple(min(w, cap) for w in self.weights))


@dataclass(frozen=True, eq=False)
class PrimeClasses:
    b: int
    P: int
    p0: tuple[int, ...]
    classes: dict[int, np.ndarray] = field(repr=False)

    def cls(self, u: int) -> np.ndarray:
        u %= self.b
        if u not in self.classes:
            raise DomainError(f"{u} is not a square unit modulo {self.b}")
        return self.classes[u]


_REGISTERED: dict[int, np.ndarray] = {}


def register_primes(P: int, primes: np.ndarray):
    """Supply a precomputed prime list (e.g. from a cache file)."""
    arr = np.asarray(primes, dtype=np.int64)
    arr.setflags(write=False)
    _REGISTERED[P] = arr
    _primes.cache_clear()


@lru_cache(maxsize=64)
def _primes(P: int) -> np.ndarray:
    for limit, arr in _REGISTERED.items():
        if limit >= P:
            return arr[arr <= P]
    arr = primes_upto(P)
    arr.setflags(write=False)
    return arr


def classify_primes(b: int, P: int) -> PrimeClasses:
    if P < 2:
        raise DomainError("prime cutoff must be at least 2")
    if b < 1:
        raise DomainError("b must be positive")
    primes = _primes(P)
    coprime = np.gcd(primes, b) == 1
    sq = (primes * primes) % b
    classes = {u: primes[coprime & (sq == u)] for u in square_unit_residues(b)}
    return PrimeClasses(b, P, tuple(int(p) for p in primes[~coprime]), classes)


def omega(b: int, m: int) -> WeightVector:
    """Per square class u, the number of prime factors of m (with multiplicity) in P_u."""
    if m < 1:
        raise DomainError("m must be positive")
    G = square_units(b)
    w = dict.fromkeys(G.elements, 0)
    for p, e in factorize(m).items():
        if b % p:
            w[p * p % b] += e
    return WeightVector(G.elements, tuple(w[u] for u in G.elements))


def _reachable(G: SquareUnitGroup, w: WeightVector) -> set[int]:
    if w.elements != G.elements:
        raise UsageError("weight vector is indexed by a different group")
    reach = {G.identity}
    for u, wu in zip(G.elements, w.weights):
        powers = {pow(u, x, G.b) for x in range(min(wu, G.order) + 1)}
        reach = {r * v % G.b for r in reach for v in powers}
    return reach


def c_weight(G: SquareUnitGroup, w: WeightVector) -> int:
    """Number of targets t in U_b^2 not reachable as prod u^{x_u} with x_u <= w_u."""
    return G.order - len(_reachable(G, w))


def membership_T(G: SquareUnitGroup, t: int, w: WeightVector) -> bool:
    if t not in G:
        raise DomainError(f"{t} is not in U_{G.b}^2")
    return t % G.b in _reachable(G, w)


def x_via_omega(b: int, t: int, m: int) -> int:
    return int(membership_T(square_units(b), t, omega(b, m)))


def sym_prefix(xs, K: int) -> list:
    """h_0..h_K, complete homogeneous symmetric polynomials of ``xs``.

    Processing elements one at a time, h_k <- h_k + x * h_{k-1} (new value).
    Unrolled over the elements this is a running sum per degree, which is
    what the cumulative sums below compute in extended precision.
    """
    if K < 0:
        raise DomainError("degree cap must be nonnegative")
    x = np.asarray(xs, dtype=_EXT)
    if x.size and (x.min() < 0 or x.max() >= 1):
        raise DomainError("entries must lie in [0, 1)")
    out = [_EXT(1)]
    prefix = np.ones_like(x)
    for _ in range(K):
        prefix = np.cumsum(x * prefix)
        out.append(prefix[-1] if prefix.size else _EXT(0))
    return out


@dataclass(frozen=True)
class EulerEvalConfig:
    s: float = 2.0
    P: int = 10**6
    cap: int | None = None

    def __post_init__(self):
        if not self.s > 1:
            raise DomainError("need s > 1")
        if self.P < 2:
            raise DomainError("prime cutoff must be at least 2")


def euler_tail_bound(s: float, P: int) -> float:
    """Bound on sum_{p > P} s p^{-s}, the per-product truncation error."""
    return s / ((s - 1) * P ** (s - 1) * math.log(P))


def _cap(b: int, cfg: EulerEvalConfig) -> int:
    order = len(square_unit_residues(b))
    cap = order if cfg.cap is None else cfg.cap
    if cap < order:
        # Saturation w_u >= |U_b^2| is what makes the tail aggregation exact.
        raise DomainError(f"cap {cap} is below |U_{b}^2| = {order}")
    return cap


def y_values(pc: PrimeClasses, u: int, cfg: EulerEvalConfig) -> tuple[list, object]:
    """(Y_{u,0..K-1}, tail) with tail = 1 - sum of the listed Y."""
    if not cfg.s > 1:
        raise DomainError("need s > 1")
    K = _cap(pc.b, cfg)
    ps = pc.cls(u)
    ps = ps[ps <= cfg.P]
    x = ps.astype(_EXT) ** _EXT(-cfg.s)
    h = sym_prefix(x, max(K - 1, 0))
    euler = np.prod(1 - x) if x.size else _EXT(1)
    ys = [hk * euler for hk in h[:K]]
    tail = 1 - sum(ys, _EXT(0))
    return ys, tail


_GRID_LIMIT = 2_000_000


@lru_cache(maxsize=256)
def _h_general(b: int, s: float, P: int, cap: int | None) -> float:
    cfg = EulerEvalConfig(s, P, cap)
    G = square_units(b)
    if G.order == 1:
        return 1.0
    K = _cap(b, cfg)
    pc = classify_primes(b, P)
    nonid = [u for u in G.elements if u != G.identity]
    if (K + 1) ** len(nonid) > _GRID_LIMIT:
        raise UnsupportedError(f"weight grid for b={b} is too large to enumerate")
    ytab = {}
    for u in nonid:
        ys, tail = y_values(pc, u, cfg)
        ytab[u] = ys + [tail]
    total = _EXT(0)
    for ws in itertools.product(range(K + 1), repeat=len(nonid)):
        # c_b does not read the identity coordinate; its Y's sum to 1.
        w = WeightVector.of(G, dict(zip(nonid, ws)))
        c = c_weight(G, w)
        if c:
            term = _EXT(c)
            for u, k in zip(nonid, ws):
                term *= ytab[u][k]
            total += term
    return float(G.order - total)


def _nontrivial_primes(b: int, P: int) -> np.ndarray:
    primes = _primes(P)
    return primes[(np.gcd(primes, b) == 1) & ((primes * primes) % b != 1 % b)]


@lru_cache(maxsize=256)
def _h_closed(b: int, s: float, P: int) -> float:
    order = len(square_unit_residues(b))
    if order == 1:
        return 1.0
    if order > 3:
        raise UnsupportedError(f"no closed form for |U_{b}^2| = {order}")
    x = _nontrivial_primes(b, P).astype(_EXT) ** _EXT(-s)
    euler = np.prod(1 - x)
    if order == 2:
        return float(2 - euler)
    return float(3 - 2 * euler - np.sum(x) * euler)


def h_eval(b: int, cfg: EulerEvalConfig, mode: str = "general") -> float:
    """H_b(s) with primes truncated at cfg.P.

    ``general`` sums c_b(w) times products of Y over the capped weight grid;
    ``closed`` uses the formulas available when |U_b^2| <= 3.
    """
    if b < 1:
        raise DomainError("b must be positive")
    if mode == "general":
        return _h_general(b, float(cfg.s), cfg.P, cfg.cap)
    if mode == "closed":
        return _h_closed(b, float(cfg.s), cfg.P)
    raise UsageError(f"unknown mode {mode!r}")


def h_error_bound(b: int, s: float, P: int) -> float:
    """Truncation error bound for h_eval: |U_b^2| products, each off by at most the tail."""
    order = len(square_unit_residues(b))
    return 0.0 if order == 1 else order * euler_tail_bound(s, P)


# -- exact coefficients of the closed-form zeta functions --------------------

def _euler_coeffs(pred, N: int) -> DirichletCoeffs:
    """prod (1 - p^{-s}) over primes p <= N with pred(p), expanded exactly."""
    ps = [int(p) for p in _primes(max(N, 2)) if p <= N and pred(int(p))]
    c = [0] * N
    c[0] = 1

    def walk(start, n, sign):
        for i in range(start, len(ps)):
            nn = n * ps[i]
            if nn > N:
                break
            c[nn - 1] = -sign
            walk(i + 1, nn, -sign)

    walk(0, 1, 1)
    return DirichletCoeffs(c)


def _prime_sum_coeffs(pred, N: int) -> DirichletCoeffs:
    """sum p^{-s} over primes p <= N with pred(p)."""
    c = [0] * N
    for p in _primes(max(N, 2)):
        if p <= N and pred(int(p)):
            c[int(p) - 1] = 1
    return DirichletCoeffs(c)


def _sq_in(b, residues):
    return lambda p: p % b != 0 and p * p % b in residues


_CLASS_PRIMES = {
    5: _sq_in(5, {4}),
    10: _sq_in(10, {9}),
    20: _sq_in(10, {9}),
    15: _sq_in(15, {4}),
    7: _sq_in(7, {2, 4}),
    9: _sq_in(9, {4, 7}),
    14: _sq_in(14, {9, 11}),
    18: _sq_in(18, {7, 13}),
}

SUPPORTED_B = (1, 2, 3, 4, 6, 8, 12, 24, 5, 10, 15, 20, 7, 9, 14, 18)


def explicit_zeta_coeffs(B: int, N: int) -> DirichletCoeffs:
    """Coefficients up to N of the closed-form zeta function for the listed B."""
    if B not in SUPPORTED_B:
        raise UnsupportedError(f"no closed form recorded for B={B}")
    if N < 1:
        raise DomainError("N must be positive")

    def k(n):
        return DirichletCoeffs.monomial(n, N)

    one = k(1)
    zeta_shift = DirichletCoeffs.zeta(N, shift=1)
    if B in (1, 2, 3, 4, 6, 8, 12, 24):
        inner = DirichletCoeffs.zeros(N)
        for b in divisors(B):
            inner = inner + k(b)
        return zeta_shift * inner

    E = _euler_coeffs(_CLASS_PRIMES[B], N)
    S = _prime_sum_coeffs(_CLASS_PRIMES[B], N)
    if B == 5:
        inner = 2 * one + k(5) - E
    elif B == 10:
        inner = (one + k(2)) * (2 * one + k(5)) - (one + k(2) - k(4)) * E
    elif B == 15:
        inner = (one + k(3)) * (2 * one + k(5)) - (one + k(3) - k(9)) * E
    elif B == 20:
        inner = ((one + k(2) + k(4)) * (2 * one + k(5))
                 - (one + k(2) + k(4) - k(8)) * E)
    elif B == 7:
        inner = 3 * one + k(7) - (2 * one + S) * E
    elif B == 9:
        inner = 3 * one + k(3) + k(9) - (2 * one + S) * E
    else:
        head = 3 * one + k(7) if B == 14 else 3 * one + k(3) + k(9)
        bracket = (2 * one + 2 * k(2) - k(4) - k(8)
                   + (one + k(2) - k(4)) * S)
        inner = (one + k(2)) * head - E * bracket
    return zeta_shift * inner

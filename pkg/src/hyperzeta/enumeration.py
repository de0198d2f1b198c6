"""Brute-force enumeration of sublattices and rational cosets.

Everything here is the slow, trusted side of the checks: proper classes of
index-m sublattices are counted directly, and the inclusion-exclusion data
(the integers M(B; d) and C(B; d)) is computed in two independent ways.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import gcd

from ._arith import (check_square_unit, divides_power, divisors, factorize,
                     gcd_inf, lcm, nu_p, square_unit_residues)
from .errors import DomainError
from .lattice import QZ, SublatticeHNF, _check_AB, reduce_mod_one


class DivisorTuple(tuple):
    """Strictly increasing tuple 1 <= d_1 < ... < d_k."""

    def __new__(cls, divisors):
        ds = tuple(int(d) for d in divisors)
        if not ds:
            raise DomainError("divisor tuple must be nonempty")
        if ds[0] < 1 or any(x >= y for x, y in zip(ds, ds[1:])):
            raise DomainError(f"divisors must be positive and strictly increasing: {ds}")
        return super().__new__(cls, ds)

    @property
    def gcd(self) -> int:
        return gcd(*self)

    @property
    def lcm(self) -> int:
        return lcm(*self)


def _tuple(dt) -> DivisorTuple:
    return dt if isinstance(dt, DivisorTuple) else DivisorTuple(dt)


@lru_cache(maxsize=1024)
def enumerate_sublattices(m: int) -> tuple[SublatticeHNF, ...]:
    """All index-m sublattices in Hermite normal form; sigma_1(m) of them."""
    if m < 1:
        raise DomainError(f"index must be positive, got {m}")
    return tuple(SublatticeHNF(m // d, b, d) for d in divisors(m) for b in range(d))


def bruteforce_am(A: int, B: int, m: int) -> int:
    """Number of proper isometry classes among index-m sublattices of (A, B)."""
    _check_AB(A, B)
    return len({reduce_mod_one(A * K.a + B * K.b, B * K.d)
                for K in enumerate_sublattices(m)})


def _coset_keys(m: int, d: int, A: int, B: int) -> set[tuple[int, int]]:
    # (A/B)(m/d)/d + j/d = (A m + B d j) / (B d^2)
    den = B * d * d
    base = A * m
    step = B * d
    return {reduce_mod_one(base + step * j, den) for j in range(d)}


def coset_S(m: int, d: int, A: int, B: int) -> frozenset[QZ]:
    if m < 1 or d < 1 or m % d:
        raise DomainError(f"{d} does not divide {m}")
    _check_AB(A, B)
    return frozenset(QZ(*k) for k in _coset_keys(m, d, A, B))


def coset_union_count(m: int, A: int, B: int) -> int:
    """Size of the union of S_{m,d,A/B} over d | m."""
    _check_AB(A, B)
    if m < 1:
        raise DomainError(f"index must be positive, got {m}")
    seen: set[tuple[int, int]] = set()
    for d in divisors(m):
        seen |= _coset_keys(m, d, A, B)
    return len(seen)


def coset_intersection_card(m: int, dt, A: int, B: int) -> int:
    dt = _tuple(dt)
    if any(m % d for d in dt):
        raise DomainError(f"not all of {dt} divide {m}")
    _check_AB(A, B)
    common = _coset_keys(m, dt[0], A, B)
    for d in dt[1:]:
        common &= _coset_keys(m, d, A, B)
    return len(common)


def _ideal_intersection(gens: list[tuple[int, int]]) -> tuple[int, int]:
    """Generator of the intersection of the ideals (p/q)Z, each p/q reduced."""
    num, den = gens[0]
    for p, q in gens[1:]:
        num = lcm(num, p)
        den = gcd(den, q)
    return num, den


def M_direct(B: int, dt) -> int:
    """Generator of the intersection of the d_i Z and B gcd(d) (d_i/d_j - d_j/d_i)^-1 Z."""
    dt = _tuple(dt)
    if B < 1:
        raise DomainError("B must be positive")
    d = dt.gcd
    gens = [(di, 1) for di in dt]
    for di, dj in combinations(dt, 2):
        # B d (d_i/d_j - d_j/d_i)^{-1} = B d d_i d_j / (d_i^2 - d_j^2)
        num, den = B * d * di * dj, abs(di * di - dj * dj)
        g = gcd(num, den)
        gens.append((num // g, den // g))
    num, den = _ideal_intersection(gens)
    if den != 1:
        raise DomainError("intersection is not an integral ideal")
    return num


def M_valuation(B: int, dt) -> int:
    """Same integer as ``M_direct``, assembled one prime at a time."""
    dt = _tuple(dt)
    if B < 1:
        raise DomainError("B must be positive")
    d = dt.gcd
    primes = set(factorize(B))
    for di in dt:
        primes |= set(factorize(di))
    out = 1
    for p in sorted(primes):
        vals = [nu_p(di, p) for di in dt]
        vB = nu_p(B, p)
        e = max(vals) + vB
        if len(set(vals)) == 1:
            diff = min((nu_p((di // d) ** 2 - (dj // d) ** 2, p)
                        for di, dj in combinations(dt, 2)), default=float("inf"))
            e -= min(vB, diff)
        out *= p**e
    return out


def C_of(B: int, dt) -> int:
    dt = _tuple(dt)
    M = M_direct(B, dt)
    q, r = divmod(B * dt.lcm, M)
    if r:
        raise DomainError("M does not divide B lcm(d)")
    return q


def D_set(b: int, m: int, delta: int, t: int) -> frozenset[int]:
    """{d | m : delta | d and (d/delta)^2 = t mod b}."""
    _check_delta(b, m, delta)
    t = check_square_unit(b, t)
    return frozenset(d for d in divisors(m)
                     if d % delta == 0 and (d // delta) ** 2 % b == t)


def _check_delta(b: int, m: int, delta: int):
    if b < 1 or m < 1 or delta < 1:
        raise DomainError("b, m, delta must be positive")
    if m % delta or not divides_power(delta, b):
        raise DomainError(f"delta={delta} does not divide gcd(m, b^inf) for m={m}, b={b}")


def prop43_flags(B: int, b: int, m: int, dt) -> tuple[bool, bool, bool]:
    """Three conditions that should agree:

    1. b | C(B; d)
    2. all (d_i/gcd)^2 are congruent mod b to one square unit
    3. all d_i fall in a single D_set(b, m, delta, t)
    """
    dt = _tuple(dt)
    if B < 1 or b < 1 or B % b:
        raise DomainError(f"{b} does not divide {B}")
    if any(m % d for d in dt):
        raise DomainError(f"not all of {dt} divide {m}")
    flag1 = C_of(B, dt) % b == 0

    d = dt.gcd
    units = set(square_unit_residues(b))
    residues = {(di // d) ** 2 % b for di in dt}
    flag2 = (all(gcd(di // d, b) == 1 for di in dt)
             and len(residues) == 1 and residues <= units)

    members = set(dt)
    mb = gcd_inf(m, b)
    flag3 = any(members <= D_set(b, m, delta, t)
                for delta in divisors(mb) for t in units)
    return flag1, flag2, flag3


def _union_of_subgroups(ds) -> int:
    """#(union of (1/d)Z/Z)."""
    return len({reduce_mod_one(j, d) for d in ds for j in range(d)})


def prop44_check(b: int, m: int, delta: int, t: int) -> bool:
    """Union over D_set(b, m, delta, t) has delta times the size of the coprime-part union."""
    _check_delta(b, m, delta)
    t = check_square_unit(b, t)
    lhs = _union_of_subgroups(D_set(b, m, delta, t))
    m_co = m // gcd_inf(m, b)
    rhs = _union_of_subgroups([d for d in divisors(m_co) if d * d % b == t])
    return lhs == delta * rhs

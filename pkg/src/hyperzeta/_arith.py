"""Small integer helpers used by several modules."""

from functools import lru_cache
from math import gcd

from .errors import DomainError


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def nu_p(n: int, p: int) -> float | int:
    """p-adic valuation; ``inf`` for n == 0."""
    if n == 0:
        return float("inf")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def nu_p_rational(num: int, den: int, p: int) -> float | int:
    return nu_p(num, p) - nu_p(den, p)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """Sorted divisors of ``n >= 1``."""
    if n < 1:
        raise DomainError(f"divisors of {n}")
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def sigma1(n: int) -> int:
    return sum(divisors(n))


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


def gcd_inf(x: int, y: int) -> int:
    """Product of p**nu_p(x) over the primes p dividing y."""
    if x < 1 or y < 1:
        raise DomainError("gcd_inf needs positive arguments")
    out = 1
    for p in factorize(y):
        while x % p == 0:
            x //= p
            out *= p
    return out


def divides_power(x: int, y: int) -> bool:
    """True iff x | y**k for some k (written x | y^inf)."""
    return gcd_inf(x, y) == x


@lru_cache(maxsize=None)
def square_unit_residues(b: int) -> tuple[int, ...]:
    """Sorted residues ``{a*a mod b : gcd(a, b) = 1}``.

    For b = 1 this is ``(0,)``: the single residue class, which is also 1 mod 1.
    """
    if b < 1:
        raise DomainError(f"modulus must be positive, got {b}")
    return tuple(sorted({a * a % b for a in range(b) if gcd(a, b) == 1}))


def check_square_unit(b: int, t: int) -> int:
    """Reduce ``t`` mod b and check it lies in U_b^2; return the residue."""
    r = t % b
    if r not in square_unit_residues(b):
        raise DomainError(f"{t} is not a square unit modulo {b}")
    return r

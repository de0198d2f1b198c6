"""Residues at s = 2 and the proportion of proper classes.

r is the limit of (number of proper classes of index < X) over (number of
sublattices of Z^2 of index < X); it equals Res_{s=2} / zeta(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._arith import divisors, square_unit_residues
from .dirichlet import sieve_tables, theorem11_coeffs
from .errors import DomainError
from .squareclass import EulerEvalConfig, h_error_bound, h_eval

ZETA2 = math.pi**2 / 6
DEFAULT_PRIME_LIMIT = 10**6
TABLE1_B = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24)


@dataclass(frozen=True)
class RatioReport:
    B: int
    residue: float
    r: float
    two_r_minus_one: float
    prime_limit: int
    error_bound: float
    residue_exact: Fraction | None = None

    def as_row(self) -> dict:
        return {
            "B": self.B,
            "residue": self.residue,
            "residue_exact": None if self.residue_exact is None else str(self.residue_exact),
            "r": self.r,
            "two_r_minus_one": self.two_r_minus_one,
            "prime_limit": self.prime_limit,
            "error_bound": self.error_bound,
        }


def _h_at_2(b: int, P: int) -> float:
    mode = "closed" if len(square_unit_residues(b)) <= 3 else "general"
    return h_eval(b, EulerEvalConfig(2.0, P), mode)


def residue_exact(B: int) -> Fraction | None:
    """sum_{b | B} (b/B)^2 when every H_b is identically 1, else None."""
    if B < 1:
        raise DomainError("B must be positive")
    if any(len(square_unit_residues(b)) > 1 for b in divisors(B)):
        return None
    return sum((Fraction(b, B) ** 2 for b in divisors(B)), Fraction(0))


def residue_at_2(B: int, P: int = DEFAULT_PRIME_LIMIT) -> float:
    if B < 1:
        raise DomainError("B must be positive")
    exact = residue_exact(B)
    if exact is not None:
        return float(exact)
    return math.fsum((b / B) ** 2 * _h_at_2(b, P) for b in divisors(B))


def residue_error_bound(B: int, P: int = DEFAULT_PRIME_LIMIT) -> float:
    return math.fsum((b / B) ** 2 * h_error_bound(b, 2.0, P) for b in divisors(B))


def ratio_r(B: int, P: int = DEFAULT_PRIME_LIMIT) -> RatioReport:
    res = residue_at_2(B, P)
    r = res / ZETA2
    return RatioReport(
        B=B,
        residue=res,
        r=r,
        two_r_minus_one=2 * r - 1,
        prime_limit=P,
        error_bound=residue_error_bound(B, P) / ZETA2,
        residue_exact=residue_exact(B),
    )


def table1(P: int = DEFAULT_PRIME_LIMIT) -> list[RatioReport]:
    return [ratio_r(B, P) for B in TABLE1_B]


def _partial_sums(B: int, X: int) -> tuple[int, int]:
    if X < 2:
        raise DomainError("need X >= 2")
    tables = sieve_tables(X - 1)
    coeffs = theorem11_coeffs(B, X - 1, tables)
    classes = sum(coeffs)
    lattices = int(tables.sigma1[1:X].sum())
    return classes, lattices


def partial_ratio(B: int, X: int) -> float:
    """s_X^+(L) / s_X(Z^2), sums over indices m < X."""
    classes, lattices = _partial_sums(B, X)
    return classes / lattices


def slope_check(B: int, X: int, P: int = DEFAULT_PRIME_LIMIT) -> float:
    """s_X^+(L) / ((Res/2) X^2); tends to 1."""
    if X < 100:
        raise DomainError("need X >= 100")
    classes, _ = _partial_sums(B, X)
    return classes / (residue_at_2(B, P) / 2 * X * X)

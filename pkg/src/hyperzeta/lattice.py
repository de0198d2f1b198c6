"""Sublattices of the hyperbolic plane and their proper isometry classes.

The lattice H = Z e1 + Z e2 carries Q(e1) = Q(e2) = 0 and B(e1, e2) = 1/2.
Every full-rank sublattice is Z(alpha e1 + beta e2) + Z(gamma e2) for some
integers alpha, gamma != 0 and beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple

from .errors import DomainError, InvariantViolation


@dataclass(frozen=True)
class BasisTriple:
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if self.alpha == 0 or self.gamma == 0:
            raise DomainError("rank deficient: alpha and gamma must be nonzero")


@dataclass(frozen=True)
class CanonicalLattice:
    """Normal form (n, A, B): Gram matrix [[nA, nB/2], [nB/2, 0]]."""

    n: int
    A: int
    B: int

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.A <= self.B or gcd(self.A, self.B) != 1:
            raise DomainError(f"not a canonical lattice: {self}")

    def as_basis_triple(self) -> BasisTriple:
        # Same Gram matrix as the canonical basis, scaled into e1/e2 coordinates.
        return BasisTriple(self.n, self.A, self.B)


@dataclass(frozen=True)
class SublatticeHNF:
    """Z(a e1 + b e2) + Z(d e2) with 0 <= b < d; index a*d."""

    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.d < 1 or not 0 <= self.b < self.d:
            raise DomainError(f"not in Hermite normal form: {self}")

    @property
    def index(self) -> int:
        return self.a * self.d


class QZ(NamedTuple):
    """Reduced representative num/den of an element of Q/Z, 0 <= num < den."""

    num: int
    den: int

    def __str__(self):
        return f"{self.num}/{self.den}"

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


def reduce_mod_one(num: int, den: int) -> tuple[int, int]:
    """Plain-tuple form of ``QZ`` for hot loops; compares equal to the QZ."""
    num %= den
    g = gcd(num, den)
    return num // g, den // g


def qz(num: int, den: int) -> QZ:
    if den < 1:
        raise DomainError("denominator must be positive")
    return QZ(*reduce_mod_one(num, den))


def canonicalize(t: BasisTriple) -> CanonicalLattice:
    alpha, beta, gamma = t.alpha, t.beta, t.gamma
    if alpha == 0 or gamma == 0:
        raise DomainError("rank deficient")
    # Negating a basis vector does not change the lattice.
    if alpha < 0:
        alpha, beta = -alpha, -beta
    if gamma < 0:
        gamma = -gamma
    g = gcd(beta, gamma)
    B = gamma // g
    A = (beta // g) % B or B
    return CanonicalLattice(alpha * g, A, B)


def canonical_basis(t: BasisTriple) -> BasisTriple:
    """Basis of the same subgroup as ``t`` whose Gram matrix is the normal form."""
    L = canonicalize(t)
    alpha, gamma = abs(t.alpha), abs(t.gamma)
    g = gamma // L.B
    return BasisTriple(alpha, g * L.A, gamma)


def basis_gram(t: BasisTriple) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Gram matrix of the basis (alpha e1 + beta e2, gamma e2) inside H."""
    half = Fraction(1, 2)
    g11 = Fraction(t.alpha * t.beta)
    g12 = half * t.alpha * t.gamma
    return g11, g12, g12, Fraction(0)


def gram(L: CanonicalLattice) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    off = Fraction(L.n * L.B, 2)
    return Fraction(L.n * L.A), off, off, Fraction(0)


def invariant_B(L: CanonicalLattice) -> int:
    """The generator of [H:L] (nL)^-1, cross-checked against the stored B."""
    g11, g12, _, g22 = gram(L)
    disc = g11 * g22 - g12 * g12
    ratio = disc / Fraction(-1, 4)
    index = isqrt(ratio.numerator)
    if ratio.denominator != 1 or index * index != ratio.numerator:
        raise InvariantViolation(f"discriminant ratio {ratio} is not a square")
    # Norm ideal of a binary lattice: generated by Q(v1), Q(v2), 2B(v1, v2).
    gens = [g11, g22, 2 * g12]
    if any(x.denominator != 1 for x in gens):
        raise InvariantViolation("norm ideal is not integral")
    norm = 0
    for x in gens:
        norm = gcd(norm, x.numerator)
    if index % norm or index // norm != L.B:
        raise InvariantViolation(f"[H:L]/nL = {index}/{norm} disagrees with B={L.B}")
    return index // norm


def _check_AB(A: int, B: int):
    if B < 1 or gcd(A, B) != 1:
        raise DomainError(f"need B >= 1 and gcd(A, B) = 1, got A={A}, B={B}")


def class_invariant(A: int, B: int, K: SublatticeHNF) -> QZ:
    """(A/B)(a/d) + b/d modulo Z; equal values <=> properly isometric (same index)."""
    _check_AB(A, B)
    return QZ(*reduce_mod_one(A * K.a + B * K.b, B * K.d))


def properly_isometric(A: int, B: int, K1: SublatticeHNF, K2: SublatticeHNF) -> bool:
    if K1.index != K2.index:
        _check_AB(A, B)
        return False
    return class_invariant(A, B, K1) == class_invariant(A, B, K2)

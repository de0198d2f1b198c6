"""
Exact Dirichlet series arithmetic
=================================

Truncated Dirichlet series with exact integer coefficients: convolution,
division by a series with unit leading term, and the k^{-s} shift.
"""

from hyperzeta import DirichletCoeffs, ddiv, dmul, shift_scale
from hyperzeta.dirichlet import count_squares_series

N = 12
zeta = DirichletCoeffs.zeta(N)          # zeta(s)
zeta1 = DirichletCoeffs.zeta(N, shift=1)  # zeta(s - 1)

print("tau(m)   :", dmul(zeta, zeta).tolist())
print("sigma(m) :", dmul(zeta, zeta1).tolist())
print("mu(m)    :", ddiv(DirichletCoeffs.identity(N), zeta).tolist())
print("phi(m)   :", ddiv(zeta1, zeta).tolist())
print("2^-s zeta:", shift_scale(zeta, 2).tolist())

# number of distinct d^2 mod 7 over divisors d of m coprime to 7
print("squares mod 7:", count_squares_series(7, N).tolist())

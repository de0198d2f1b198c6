"""
Square classes and the Euler factor H_b
=======================================

Primes are grouped by p^2 mod b. Counting which square units are reachable
from the prime factorisation of m reproduces the divisor-square counts, and
the same bookkeeping turns into an Euler-product expression for H_b(s).
"""

from hyperzeta import EulerEvalConfig, classify_primes, h_eval, omega, square_units
from hyperzeta.dirichlet import X_func
from hyperzeta.squareclass import c_weight, h_error_bound, x_via_omega

b = 7
G = square_units(b)
print("square units mod 7:", G.elements)

pc = classify_primes(b, 40)
print("dividing b:", pc.p0)
for u in G.elements:
    print(f"  p^2 = {u} mod 7:", list(pc.cls(u)))

# weight vector of m = 12 = 2^2 * 3 and the number of unreachable targets
w = omega(b, 12)
print("omega(12) =", w.as_dict(), " unreachable:", c_weight(G, w))
for t in G.elements:
    print(f"  t={t}: via omega {x_via_omega(b, t, 12)}, by divisors {X_func(b, t, 12)}")

# H_b(2) in both evaluation modes, with the truncation bound
cfg = EulerEvalConfig(2.0, 10**6)
for b in (5, 7, 9, 24):
    print(f"H_{b}(2) general={h_eval(b, cfg, 'general'):.12f} "
          f"closed={h_eval(b, cfg, 'closed'):.12f}  bound={h_error_bound(b, 2.0, cfg.P):.1e}")

"""
Partial sums approach the predicted ratio
=========================================

Summing the coefficients up to X and comparing with the number of
sublattices of Z^2 of index below X gives an empirical ratio that settles on
r; the class count itself grows like (Res / 2) X^2.
"""

from hyperzeta.analytics import partial_ratio, ratio_r, slope_check

for B in (1, 2, 5, 7):
    r = ratio_r(B).r
    gaps = [abs(partial_ratio(B, X) - r) for X in (10**2, 10**3, 10**4)]
    print(f"B={B}: r={r:.5f}  gaps at X=1e2,1e3,1e4: "
          + ", ".join(f"{g:.1e}" for g in gaps)
          + f"  slope at 1e4: {slope_check(B, 10**4):.4f}")

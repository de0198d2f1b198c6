"""
Proportion of proper classes
============================

The residue of the class zeta function at s = 2, divided by zeta(2), is the
limiting ratio r of proper classes to sublattices. 2r - 1 measures how often a
class contains a single sublattice.
"""

from hyperzeta import table1

print("  B       r    2r-1   residue (exact when available)")
for rep in table1(10**6):
    exact = rep.residue_exact if rep.residue_exact is not None else f"{rep.residue:.6f}"
    print(f"{rep.B:3d}  {rep.r:.4f}  {rep.two_r_minus_one:.4f}   {exact}"
          f"   (+/- {rep.error_bound:.1e})")

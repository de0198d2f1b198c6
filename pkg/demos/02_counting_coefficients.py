"""
Three ways to count proper classes
==================================

The number a_m of proper classes of index-m sublattices can be computed by
brute force over Hermite normal forms, as the size of a union of cosets in
Q/Z, or from the Dirichlet series coefficients. All three agree.
"""

from hyperzeta import bruteforce_am, coset_union_count, theorem11_coeffs

B, N = 12, 40
coeffs = theorem11_coeffs(B, N)

print(" m  brute  cosets  series")
for m in range(1, N + 1):
    # any A coprime to B gives the same answer
    brute = bruteforce_am(5, B, m)
    cosets = coset_union_count(m, 7, B)
    print(f"{m:2d}  {brute:5d}  {cosets:6d}  {coeffs[m]:6d}")
    assert brute == cosets == coeffs[m]

# for B = 1 the coefficients are simply a_m = m
print(theorem11_coeffs(1, 10).tolist())

"""
Sublattices of the hyperbolic plane and their proper classes
============================================================

A lattice Z(alpha e1 + beta e2) + Z(gamma e2) in the hyperbolic plane has a
normal form (n, A, B). Only B matters for counting proper classes of
sublattices, and a single rational number mod 1 decides when two sublattices
of the same index are properly isometric.
"""

from collections import defaultdict

from hyperzeta import BasisTriple, canonicalize, class_invariant, enumerate_sublattices, gram
from hyperzeta.lattice import invariant_B

# normal form of a lattice given by an arbitrary basis
L = canonicalize(BasisTriple(1, 5, 3))
print("normal form:", L)
print("Gram matrix entries:", [str(x) for x in gram(L)])

# B can also be read off from the index and the norm ideal
print("B from index / norm ideal:", invariant_B(L))

# every index-6 sublattice in Hermite normal form
Ks = enumerate_sublattices(6)
print(f"{len(Ks)} sublattices of index 6")

# group them by the class invariant
groups = defaultdict(list)
for K in Ks:
    groups[class_invariant(L.A, L.B, K)].append(K)
for inv, members in sorted(groups.items(), key=lambda kv: kv[0].to_fraction()):
    print(f"  {inv.num}/{inv.den}: {[(K.a, K.b, K.d) for K in members]}")
print(f"{len(groups)} proper classes")

"""The bar-involution fixed point: canonical and dual canonical bases.

The involution psi_c = tau(Theta^(n)) . bar is unipotent triangular on dual
monomials, so each basis vector is the monomial plus corrections at larger
indices, with every correction coefficient in q^-1 Z[q^-1].  The solver walks
indices downward and solves one bar-equation per correction.
"""

from qcanon import canonical_basis_pair, dual_canonical_basis, is_singular, \
    singular_subset
from qcanon.canonical import psi_c

print("dual canonical basis of (V_1 x V_1) at level 1:")
for b in dual_canonical_basis((1, 1), 1):
    print(f"  {b}")

print("\nthe canonical basis on the plain side pairs to the identity:")
for b in canonical_basis_pair((1, 1), 1):
    print(f"  {b}")

print("\na richer slice, (V_2 x V_2) at level 2:")
basis = dual_canonical_basis((2, 2), 2)
for b in basis:
    marker = "  <- singular" if is_singular(b) else ""
    print(f"  {b}{marker}")

print("\nsingular members (E-kernel), count certified by exact rank:")
print("  indices:", [b.index for b in singular_subset(basis)])

print("\npsi_c really is an involution here:",
      psi_c((2, 2), 2).is_involution())

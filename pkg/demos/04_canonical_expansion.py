"""Expanding the staircase monomial into the canonical basis.

The staircase monomial multiplies divided powers with exponents
(n, ..., 1) then (1, ..., n).  Its PBW coefficients have a closed form;
the canonical coefficients come out of a triangular solve against the bar
involution.  At small n every coefficient factors into quantum symbols.
"""

from lindeg import (
    bar_transition_coeff,
    canonical_coeffs,
    canonical_transition_matrix,
    dual_rank_tuple,
    pbw_coeff,
    ptuples,
    upper_bounds,
)
from lindeg.cli import quantum_label

n = 4
print(f"staircase monomial, n={n}")

# PBW side: closed-form coefficients over the parameter set.
print("\nPBW coefficients:")
for y in sorted(ptuples(n), reverse=True):
    print(f"  {y}: {quantum_label(pbw_coeff(n, y))}")

# The bar involution mixes PBW monomials downward; the triangular solve
# extracts the canonical transition matrix from it.  Off-diagonal entries
# live strictly below degree zero.
z = canonical_transition_matrix(2)
print("\nsmallest nontrivial transition entry:",
      z[((1,), (0,))])
print("its defining bar-antisymmetrization:",
      bar_transition_coeff(2, (1,), (0,)))

# Canonical side: the full table with rank tuples, as in `lindeg expand 4`.
print("\ncanonical coefficients and rank tuples:")
mu = canonical_coeffs(n)
for y in sorted(mu, reverse=True):
    rt = dual_rank_tuple(n, y)
    print(f"  {y}  rank {rt.off_diagonal()}  coeff {quantum_label(mu[y])}")

# The coefficient at the maximal parameter equals the PBW coefficient
# there; for odd n it is a single quantum integer, for even n it is 1.
# (Observed; the package prints it for inspection without asserting a
# general claim.)
print("\ncoefficient at the maximal parameter:")
for k in range(1, 7):
    top = upper_bounds(k)
    print(f"  n={k}: {quantum_label(canonical_coeffs(k)[top])}")

"""Motzkin paths, the parameter set, multisegments and rank tuples.

A Motzkin path of length n is a nonnegative lattice path returning to zero
with steps -1/0/+1.  Each path determines a rank tuple, the orbit invariant
of the degeneration family; the threshold tuple r1 separates the orbits
with irreducible flag-dimensional fibres from the rest.
"""

from lindeg import (
    motzkin_number,
    motzkin_paths,
    path_to_multisegment,
    ptuples,
    r1_tuple,
    rank_from_motzkin,
    single_peak_paths,
)

n = 4
paths = motzkin_paths(n)
print(f"Motzkin paths of length {n} ({len(paths)} = M_{n}):")
for x in paths:
    print("  ", x)

print("\nparameter set has", len(ptuples(n)), "tuples; the paths are the")
print("subset whose dual rank tuples clear the threshold",
      r1_tuple(n).off_diagonal())

# Every path carries a near-simple multisegment (points and length-2
# segments only) and a rank tuple.
x = (1, 2, 1)
print(f"\npath {x}:")
print("  multisegment:", path_to_multisegment(n, x))
rt = rank_from_motzkin(n, x)
print("  rank tuple:  ", rt.off_diagonal())
print("  above threshold:", rt.geq_r1())
print("  reflection:  ", rt.hat().off_diagonal())

# Single-peak paths (weakly up, then weakly down) are counted by powers of
# two; they parametrize the locus where fibres are Schubert varieties.
for k in range(1, 7):
    print(f"single-peak paths, n={k}: {len(single_peak_paths(k))}")

print("\nMotzkin numbers:", [motzkin_number(k) for k in range(1, 11)])

"""Multisegment duality two ways: brute force vs closed form.

The dual rank tuple of a multisegment minimizes a grid sum over monotone
maps.  For near-simple multisegments (segments of length at most 2) the
minimum collapses to three terms, which is what the support computation
uses; the full enumeration stays around as an independent oracle.
"""

from lindeg import (
    Multisegment,
    dual_rank_tuple,
    dual_rank_tuple_general,
    monotone_maps,
    next_neighbor_rank,
    path_to_multisegment,
    ptuples,
)

# Monotone maps from a 2x3 grid into a 2-element chain.
maps = list(monotone_maps(2, 3, 0, 1))
print("monotone 2x3 -> {0,1}:", len(maps), "maps, e.g.", maps[0], maps[-1])

# Both formulas on the multisegment of a path.
n, x = 4, (1, 0, 1)
m = path_to_multisegment(n, x)
print(f"\npath {x}: multisegment {m}")
print("closed form:", dual_rank_tuple(n, x).off_diagonal())
print("brute force:", dual_rank_tuple_general(m).off_diagonal())

# The general formula also handles longer segments.
m2 = Multisegment(3, {(1, 3): 1, (2, 2): 1})
print(f"\ngeneral multisegment {m2}:")
print("brute force:", dual_rank_tuple_general(m2).off_diagonal(),
      "diagonal", tuple(dual_rank_tuple_general(m2)[(i, i)]
                        for i in range(1, 4)))

# The next-neighbour entries decide Motzkin membership on their own:
# a parameter tuple is a path exactly when all of them are >= n.
print("\nmembership by next-neighbour entries, n=4:")
for y in ptuples(4):
    entries = tuple(next_neighbor_rank(4, y, i) for i in range(1, 4))
    tag = "path" if min(entries) >= 4 else "----"
    print(f"  {y}  {entries}  {tag}")

"""Knight-Zelevinsky multisegment duality, as rank tuples.

Two implementations of the dual rank tuple are provided on purpose:

* ``kz_rank_general`` evaluates the full minimum formula, enumerating all
  monotone maps from the grid [1, i] x [j, n] into [i, j].  It works for any
  multisegment and serves as the brute-force oracle.
* ``kz_rank_near_simple`` is the closed form available when every segment
  has length 1 or 2: the grid minimum collapses to
  min over i <= p <= q <= r <= j of (m_{p-1,p} + m_{q,q} + m_{r,r+1}),
  with out-of-range multiplicities read as zero.

For parameter tuples the near-simple form specializes further; the package
never computes the duality as a map on multisegments, only its rank tuples,
which is all the support computation needs.
"""

from __future__ import annotations

from .combinatorics import (
    Multisegment,
    RankTuple,
    in_parameter_set,
    padded,
    path_to_multisegment,
)


def monotone_maps(nrows: int, ncols: int, lo: int, hi: int):
    """Yield all maps from an nrows x ncols grid to [lo, hi] that are weakly
    increasing along rows and down columns, as tuples of row tuples."""
    if nrows < 1 or ncols < 1:
        raise ValueError("grid must be nonempty")
    if hi < lo:
        return

    def rows_at_least(floor):
        # weakly increasing rows bounded below elementwise by `floor`
        def extend(prefix):
            col = len(prefix)
            if col == ncols:
                yield prefix
                return
            start = max(floor[col], prefix[-1] if prefix else lo)
            for val in range(start, hi + 1):
                yield from extend(prefix + (val,))

        yield from extend(())

    def build(done, prev):
        if done == nrows:
            yield ()
            return
        for row in rows_at_least(prev):
            for rest in build(done + 1, row):
                yield (row,) + rest

    yield from build(0, (lo,) * ncols)


def kz_rank_general(m: Multisegment, i: int, j: int) -> int:
    """Entry (i, j) of the dual rank tuple by the full minimum formula.

    Minimizes, over monotone maps nu from [1, i] x [j, n] to [i, j], the sum
    of m_{nu(k,l)+k-i, nu(k,l)+l-j} over the grid; subscripts that leave the
    triangle 1 <= a <= b <= n contribute zero.
    """
    n = m.n
    if not (1 <= i <= j <= n):
        raise ValueError(f"need 1 <= i <= j <= {n}, got ({i}, {j})")
    mult = m.multiplicity
    cells = [(k, l) for k in range(1, i + 1) for l in range(j, n + 1)]
    best = None
    for nu in monotone_maps(i, n - j + 1, i, j):
        total = 0
        for k, l in cells:
            val = nu[k - 1][l - j]
            total += mult(val + k - i, val + l - j)
        if best is None or total < best:
            best = total
    return best


def kz_rank_near_simple(m: Multisegment, i: int, j: int) -> int:
    """Entry (i, j) of the dual rank tuple for a near-simple multisegment."""
    n = m.n
    if not (1 <= i <= j <= n):
        raise ValueError(f"need 1 <= i <= j <= {n}, got ({i}, {j})")
    if not m.is_near_simple():
        raise ValueError("closed form requires segments of length at most 2")
    mult = m.multiplicity
    best = None
    for p in range(i, j + 1):
        head = mult(p - 1, p)
        for q in range(p, j + 1):
            mid = head + mult(q, q)
            for r in range(q, j + 1):
                total = mid + mult(r, r + 1)
                if best is None or total < best:
                    best = total
    return best


def kz_rank_simple(n: int, x, i: int, j: int) -> int:
    """Entry (i, j) of the dual rank tuple of the near-simple multisegment
    attached to a parameter tuple x."""
    if not in_parameter_set(n, x):
        raise ValueError(f"{tuple(x)!r} is not a parameter tuple for n={n}")
    return kz_rank_near_simple(path_to_multisegment(n, x), i, j)


def next_neighbor_rank(n: int, x, i: int) -> int:
    """The (i, i+1) entry, n + 1 - max(0, x_i - x_{i+1}, x_i - x_{i-1}).

    This is the fast membership test: a parameter tuple is a Motzkin path
    exactly when every next-neighbour entry is at least n.
    """
    if not in_parameter_set(n, x):
        raise ValueError(f"{tuple(x)!r} is not a parameter tuple for n={n}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= {n - 1}, got {i}")
    xe = padded(n, x)
    return n + 1 - max(0, xe[i] - xe[i + 1], xe[i] - xe[i - 1])


def dual_rank_tuple(n: int, x) -> RankTuple:
    """The full dual rank tuple of x', assembled from the closed form."""
    if not in_parameter_set(n, x):
        raise ValueError(f"{tuple(x)!r} is not a parameter tuple for n={n}")
    m = path_to_multisegment(n, x)
    return RankTuple(n, {(i, j): kz_rank_near_simple(m, i, j)
                         for i in range(1, n + 1) for j in range(i, n + 1)})


def dual_rank_tuple_general(m: Multisegment) -> RankTuple:
    """The full dual rank tuple of any multisegment, by brute force."""
    n = m.n
    return RankTuple(n, {(i, j): kz_rank_general(m, i, j)
                         for i in range(1, n + 1) for j in range(i, n + 1)})

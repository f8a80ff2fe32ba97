"""Duality rank tuples: brute-force oracle vs closed form."""

import itertools

import pytest

from lindeg.combinatorics import (
    Multisegment,
    motzkin_paths,
    path_to_multisegment,
    ptuples,
)
from lindeg.duality import (
    dual_rank_tuple,
    dual_rank_tuple_general,
    kz_rank_general,
    kz_rank_near_simple,
    kz_rank_simple,
    monotone_maps,
    next_neighbor_rank,
)


def brute_monotone_count(nrows, ncols, lo, hi):
    """Filter the full grid of value tables for monotonicity."""
    count = 0
    cells = nrows * ncols
    for flat in itertools.product(range(lo, hi + 1), repeat=cells):
        grid = [flat[r * ncols:(r + 1) * ncols] for r in range(nrows)]
        ok = all(grid[r][c] <= grid[r][c + 1]
                 for r in range(nrows) for c in range(ncols - 1))
        ok = ok and all(grid[r][c] <= grid[r + 1][c]
                        for r in range(nrows - 1) for c in range(ncols))
        if ok:
            count += 1
    return count


def test_monotone_maps_counts():
    assert sum(1 for _ in monotone_maps(1, 1, 2, 5)) == 4
    for nrows, ncols, lo, hi in [(2, 2, 1, 3), (2, 3, 2, 3), (3, 2, 0, 2)]:
        got = sum(1 for _ in monotone_maps(nrows, ncols, lo, hi))
        assert got == brute_monotone_count(nrows, ncols, lo, hi)
    assert list(monotone_maps(1, 1, 3, 2)) == []


def test_monotone_maps_are_monotone():
    for grid in monotone_maps(2, 3, 1, 3):
        for r in range(2):
            assert all(grid[r][c] <= grid[r][c + 1] for c in range(2))
        for c in range(3):
            assert grid[0][c] <= grid[1][c]


def test_general_on_zero_multisegment():
    zero = Multisegment(3)
    for i in range(1, 4):
        for j in range(i, 4):
            assert kz_rank_general(zero, i, j) == 0


def test_general_small_case():
    # the multisegment of the height-one path at n=2; full dual tuple
    # worked out by enumerating the (at most 2x2) grids directly
    m = path_to_multisegment(2, (1,))
    assert kz_rank_general(m, 1, 1) == 3
    assert kz_rank_general(m, 1, 2) == 2
    assert kz_rank_general(m, 2, 2) == 3


def test_oracle_agreement_exhaustive():
    for n in range(1, 6):
        for x in ptuples(n):
            m = path_to_multisegment(n, x)
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    assert (kz_rank_general(m, i, j)
                            == kz_rank_simple(n, x, i, j)), (n, x, i, j)


def test_general_equals_near_simple_with_free_diagonal():
    # the closed form covers any near-simple multisegment, not only the
    # ones coming from parameter tuples
    cases = [
        Multisegment(3, {(1, 1): 1, (2, 3): 2}),
        Multisegment(3, {(1, 2): 1, (2, 2): 5, (3, 3): 1}),
        Multisegment(4, {(1, 2): 2, (2, 3): 1, (3, 4): 2, (2, 2): 1}),
    ]
    for m in cases:
        assert dual_rank_tuple_general(m).r == {
            (i, j): kz_rank_near_simple(m, i, j)
            for i in range(1, m.n + 1) for j in range(i, m.n + 1)}


def test_simple_values():
    assert kz_rank_simple(3, (1, 0), 2, 3) == 4
    assert kz_rank_simple(3, (1, 1), 1, 3) == 2
    for n in range(1, 6):
        for x in ptuples(n):
            for i in range(1, n + 1):
                assert kz_rank_simple(n, x, i, i) == n + 1


def test_next_neighbor():
    assert next_neighbor_rank(3, (1, 0), 1) == 3
    assert next_neighbor_rank(4, (0, 2, 0), 2) == 3
    for n in range(2, 9):
        for x in motzkin_paths(n):
            for i in range(1, n):
                assert next_neighbor_rank(n, x, i) in (n, n + 1)
    for n in range(2, 7):
        for x in ptuples(n):
            rt = dual_rank_tuple(n, x)
            for i in range(1, n):
                assert rt[(i, i + 1)] == next_neighbor_rank(n, x, i)


def test_membership_dichotomy():
    # Motzkin paths pass the threshold filter; everything else fails a
    # next-neighbour bound
    motzkin = {n: set(motzkin_paths(n)) for n in range(1, 9)}
    for n in range(1, 9):
        for x in ptuples(n):
            above = dual_rank_tuple(n, x).geq_r1()
            assert above == (x in motzkin[n])
            if not above:
                assert min(next_neighbor_rank(n, x, i)
                           for i in range(1, n)) < n


def test_reversal_matches_hat():
    for n in range(1, 7):
        for x in ptuples(n):
            rev = tuple(reversed(x))
            assert dual_rank_tuple(n, rev) == dual_rank_tuple(n, x).hat()


def test_errors():
    long_segment = Multisegment(3, {(1, 3): 1})
    with pytest.raises(ValueError):
        kz_rank_near_simple(long_segment, 1, 2)
    # general formula still works: the only summands are point
    # multiplicities, all zero here
    assert kz_rank_general(long_segment, 1, 3) == 0
    with pytest.raises(ValueError):
        kz_rank_general(long_segment, 2, 1)
    with pytest.raises(ValueError):
        kz_rank_simple(3, (2, 0), 1, 2)  # outside the parameter set
    with pytest.raises(ValueError):
        next_neighbor_rank(3, (1, 1), 3)

"""Paths, parameter tuples, multisegments, rank tuples and counts."""

import random

import pytest

from lindeg.combinatorics import (
    Multisegment,
    RankTuple,
    bell_number,
    has_single_peak,
    in_parameter_set,
    is_motzkin_path,
    leq,
    motzkin_number,
    motzkin_paths,
    path_to_multisegment,
    pbw_locus_ranks,
    ptuples,
    r1_tuple,
    rank_from_motzkin,
    single_peak_paths,
    upper_bounds,
)


def set_partition_count(n):
    """Independent Bell-number oracle: count restricted growth strings."""
    def count(pos, top):
        if pos == n:
            return 1
        return sum(count(pos + 1, max(top, val))
                   for val in range(top + 2))
    return 1 if n == 0 else count(1, 0)


def test_motzkin_enumeration_small():
    assert motzkin_paths(1) == [()]
    assert motzkin_paths(2) == [(0,), (1,)]
    assert len(motzkin_paths(4)) == 9
    assert motzkin_paths(3) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_motzkin_lexicographic_and_counts():
    for n in range(1, 13):
        paths = motzkin_paths(n)
        assert paths == sorted(paths)
        assert len(set(paths)) == len(paths)
        assert len(paths) == motzkin_number(n)
        assert all(is_motzkin_path(n, x) for x in paths)


def test_motzkin_numbers():
    assert [motzkin_number(n) for n in (0, 2, 3, 4)] == [1, 2, 4, 9]
    assert motzkin_number(10) == 2188


def test_bell_numbers():
    assert bell_number(0) == 1
    assert bell_number(3) == 5
    assert bell_number(4) == 15
    for n in range(0, 9):
        assert bell_number(n) == set_partition_count(n)


def test_ptuples():
    assert ptuples(2) == [(0,), (1,)]
    assert ptuples(3) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    p4 = ptuples(4)
    assert len(p4) == 12
    assert max(p4) == (1, 2, 1)
    assert upper_bounds(4) == (1, 2, 1)
    for n in range(1, 9):
        expected = 1
        for k in range(1, n):
            expected *= min(k, n - k) + 1
        assert len(ptuples(n)) == expected
        assert all(in_parameter_set(n, y) for y in ptuples(n))


def test_motzkin_paths_lie_in_parameter_set():
    for n in range(1, 11):
        pset = set(ptuples(n))
        for x in motzkin_paths(n):
            assert x in pset


def test_leq():
    assert leq((0, 1), (1, 1))
    assert not leq((1, 0), (0, 1))
    assert leq((1, 0), (1, 0))
    with pytest.raises(ValueError):
        leq((1,), (1, 0))


def test_path_to_multisegment():
    m = path_to_multisegment(2, (1,))
    assert m.mult == {(1, 1): 2, (1, 2): 1, (2, 2): 2}
    m = path_to_multisegment(3, (0, 0))
    assert m.mult == {(1, 1): 4, (2, 2): 4, (3, 3): 4}
    m = path_to_multisegment(4, (1, 2, 1))
    assert m.mult == {(1, 1): 4, (2, 2): 2, (3, 3): 2, (4, 4): 4,
                      (1, 2): 1, (2, 3): 2, (3, 4): 1}
    with pytest.raises(ValueError):
        path_to_multisegment(2, (4,))  # point multiplicity would go negative


def test_multisegment_rank():
    m = Multisegment(2, {(1, 1): 2, (1, 2): 1, (2, 2): 2})
    rt = m.rank_tuple()
    assert rt.r == {(1, 1): 3, (1, 2): 1, (2, 2): 3}
    zero = Multisegment(3)
    assert zero.rank_tuple().r == {k: 0 for k in zero.rank_tuple().r}
    one_long = Multisegment(4, {(1, 4): 1})
    assert all(v == 1 for v in one_long.rank_tuple().r.values())


def test_rank_multisegment_roundtrip_exhaustive():
    for n in range(1, 4):
        keys = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        def all_multisegments(idx, acc):
            if idx == len(keys):
                yield Multisegment(n, dict(acc))
                return
            for v in range(4):
                acc[keys[idx]] = v
                yield from all_multisegments(idx + 1, acc)
            del acc[keys[idx]]
        for m in all_multisegments(0, {}):
            assert m.rank_tuple().to_multisegment() == m


def test_rank_multisegment_roundtrip_n4():
    keys = [(i, j) for i in range(1, 5) for j in range(i, 5)]
    # exhaustive over the 0/1 grid, then a seeded sample of the wider grid
    for mask in range(1 << len(keys)):
        m = Multisegment(4, {k: mask >> b & 1 for b, k in enumerate(keys)})
        assert m.rank_tuple().to_multisegment() == m
    rng = random.Random(23)
    for _ in range(2000):
        m = Multisegment(4, {k: rng.randint(0, 3) for k in keys})
        assert m.rank_tuple().to_multisegment() == m


def test_rank_to_multisegment_values():
    rt = RankTuple(3, {(1, 1): 4, (1, 2): 3, (1, 3): 2,
                       (2, 2): 4, (2, 3): 3, (3, 3): 4})
    m = rt.to_multisegment()
    assert m.mult == {(1, 1): 1, (1, 2): 1, (1, 3): 2, (2, 3): 1, (3, 3): 1}
    assert m.rank_tuple() == rt
    bad = RankTuple(2, {(1, 1): 0, (1, 2): 1, (2, 2): 0})
    with pytest.raises(ValueError):
        bad.to_multisegment()


def test_r1_tuple():
    assert r1_tuple(3).off_diagonal() == (3, 2, 3)
    assert r1_tuple(4).off_diagonal() == (4, 3, 2, 4, 3, 4)
    for n in range(1, 7):
        r1 = r1_tuple(n)
        assert all(r1[(i, i)] == n + 1 for i in range(1, n + 1))
        assert r1.hat() == r1
        assert r1.geq_r1()


def test_rank_from_motzkin_small():
    assert rank_from_motzkin(3, (1, 1)).off_diagonal() == (3, 2, 3)
    assert rank_from_motzkin(3, (1, 0)).off_diagonal() == (3, 3, 4)
    assert rank_from_motzkin(4, (1, 2, 1)).off_diagonal() == (4, 3, 2, 4, 3, 4)
    with pytest.raises(ValueError):
        rank_from_motzkin(3, (0, 2))


def test_rank_from_motzkin_dominates_threshold_and_injective():
    for n in range(1, 9):
        seen = set()
        for x in motzkin_paths(n):
            rt = rank_from_motzkin(n, x)
            assert rt.geq_r1(), (n, x)
            assert all(rt[(i, i)] == n + 1 for i in range(1, n + 1))
            seen.add(rt)
        assert len(seen) == motzkin_number(n)


def test_hat():
    rt = rank_from_motzkin(3, (1, 0))
    assert rt.off_diagonal() == (3, 3, 4)
    assert rt.hat().off_diagonal() == (4, 3, 3)
    for n in range(1, 7):
        for x in motzkin_paths(n):
            rt = rank_from_motzkin(n, x)
            assert rt.hat().hat() == rt
            assert rt.geq_r1() == rt.hat().geq_r1()


def test_geq_r1_values():
    # off-diagonal (4, 2, 2, 3, 3, 5) with diagonal 5s
    rk2 = RankTuple(4, {(1, 1): 5, (1, 2): 4, (1, 3): 2, (1, 4): 2,
                        (2, 2): 5, (2, 3): 3, (2, 4): 3,
                        (3, 3): 5, (3, 4): 5, (4, 4): 5})
    assert not rk2.geq_r1()
    rk5 = RankTuple(4, {(1, 1): 5, (1, 2): 4, (1, 3): 4, (1, 4): 4,
                        (2, 2): 5, (2, 3): 5, (2, 4): 4,
                        (3, 3): 5, (3, 4): 4, (4, 4): 5})
    assert rk5.geq_r1()


def test_single_peak():
    assert single_peak_paths(1) == [()]
    assert len(single_peak_paths(3)) == 4
    assert len(single_peak_paths(4)) == 8
    assert not has_single_peak(4, (1, 0, 1))
    for n in range(1, 9):
        peaks = single_peak_paths(n)
        assert len(peaks) == 2 ** (n - 1)
        assert all(is_motzkin_path(n, x) for x in peaks)


def test_pbw_locus():
    for n in range(2, 9):
        locus = pbw_locus_ranks(n)
        assert len(locus) == 2 ** (n - 1)
        assert len(set(locus)) == len(locus)
        for rt in locus:
            assert all(rt[(k, k + 1)] in (n, n + 1) for k in range(1, n))
    # the eight n=4 tuples, by off-diagonal
    locus4 = {rt.off_diagonal() for rt in pbw_locus_ranks(4)}
    assert locus4 == {
        (4, 3, 2, 4, 3, 4), (4, 4, 3, 5, 4, 4), (4, 3, 3, 4, 4, 5),
        (4, 4, 4, 5, 5, 5), (5, 4, 3, 4, 3, 4), (5, 4, 4, 4, 4, 5),
        (5, 5, 4, 5, 4, 4), (5, 5, 5, 5, 5, 5)}
    # at n=3 the locus is the whole support set
    locus3 = {rt.off_diagonal() for rt in pbw_locus_ranks(3)}
    assert locus3 == {(3, 2, 3), (3, 3, 4), (4, 3, 3), (4, 4, 4)}


def test_single_peak_pbw_bijection():
    for n in range(1, 9):
        images = [rank_from_motzkin(n, x) for x in single_peak_paths(n)]
        assert len(set(images)) == len(images)
        assert set(images) == set(pbw_locus_ranks(n))


def test_rank_tuple_validation():
    with pytest.raises(ValueError):
        RankTuple(2, {(1, 1): 1, (2, 2): 1})  # missing (1, 2)
    with pytest.raises(ValueError):
        RankTuple(2, {(1, 1): 1, (1, 2): 1, (2, 2): 1, (2, 1): 1})
    with pytest.raises(ValueError):
        Multisegment(2, {(2, 1): 1})
    with pytest.raises(ValueError):
        Multisegment(2, {(1, 2): -1})

"""Motzkin paths, parameter tuples, multisegments and rank tuples.

Conventions used throughout:

* A Motzkin path of length n is a tuple ``x = (x_1, ..., x_{n-1})`` of
  nonnegative integers with implicit endpoints ``x_0 = x_n = 0`` and steps
  ``|x_i - x_{i-1}| <= 1``.  The number of such paths is the n-th Motzkin
  number.
* The ambient parameter set P(n) consists of all integer tuples y with
  ``0 <= y_k <= min(k, n-k)``; every Motzkin path lies in P(n).
* A multisegment is a multiplicity function on intervals [i, j] with
  ``1 <= i <= j <= n``; its rank tuple is ``r_ij = sum of multiplicities of
  the intervals containing [i, j]``, and the multisegment can be recovered
  from the rank tuple by inclusion-exclusion.

Everything here is pure and deterministic; enumerations are returned in
lexicographic order so that output is reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

Path = tuple  # integer tuple of length n - 1


# ---------------------------------------------------------------------------
# parameter tuples and Motzkin paths
# ---------------------------------------------------------------------------

def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def padded(n: int, x) -> tuple:
    """The tuple extended with the implicit zero endpoints x_0 and x_n."""
    return (0,) + tuple(x) + (0,)


def is_motzkin_path(n: int, x) -> bool:
    _check_n(n)
    x = tuple(x)
    if len(x) != n - 1 or any(not isinstance(c, int) or c < 0 for c in x):
        return False
    xe = padded(n, x)
    return all(abs(xe[i] - xe[i - 1]) <= 1 for i in range(1, n + 1))


def in_parameter_set(n: int, y) -> bool:
    _check_n(n)
    y = tuple(y)
    if len(y) != n - 1:
        return False
    return all(isinstance(c, int) and 0 <= c <= min(k, n - k)
               for k, c in enumerate(y, start=1))


def upper_bounds(n: int) -> tuple:
    """The componentwise-maximal parameter tuple (min(k, n-k))_k."""
    _check_n(n)
    return tuple(min(k, n - k) for k in range(1, n))


@lru_cache(maxsize=None)
def _motzkin_paths(n: int) -> tuple:
    _check_n(n)

    def extend(prefix, height):
        i = len(prefix) + 1
        if i == n:
            # last step must return to zero
            if height <= 1:
                yield prefix
            return
        for step in (-1, 0, 1):
            h = height + step
            # must stay nonnegative and be able to get back to 0 by step n
            if 0 <= h <= n - i:
                yield from extend(prefix + (h,), h)

    return tuple(extend((), 0))


def motzkin_paths(n: int) -> list:
    """All Motzkin paths of length n, lexicographically ordered."""
    return list(_motzkin_paths(n))


@lru_cache(maxsize=None)
def _ptuples(n: int) -> tuple:
    _check_n(n)
    ranges = [range(b + 1) for b in upper_bounds(n)]
    return tuple(itertools.product(*ranges))


def ptuples(n: int) -> list:
    """The full parameter set P(n), lexicographically ordered."""
    return list(_ptuples(n))


def leq(a, b) -> bool:
    """Componentwise order on parameter tuples of equal length."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("cannot compare tuples of different lengths")
    return all(x <= y for x, y in zip(a, b))


def motzkin_number(n: int) -> int:
    """The n-th Motzkin number M_n (M_0 = 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = [1]
    for k in range(n):
        nxt = m[k] + sum(m[i] * m[k - 1 - i] for i in range(k))
        m.append(nxt)
    return m[n]


def bell_number(n: int) -> int:
    """The n-th Bell number via the Bell triangle (B_0 = 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for c in row:
            nxt.append(nxt[-1] + c)
        row = nxt
    return row[0]


# ---------------------------------------------------------------------------
# multisegments and rank tuples
# ---------------------------------------------------------------------------

class Multisegment:
    """A nonnegative multiplicity function on the intervals [i, j], i <= j <= n."""

    __slots__ = ("n", "mult")

    def __init__(self, n: int, mult=None):
        _check_n(n)
        data = {}
        if mult:
            items = mult.items() if hasattr(mult, "items") else mult
            for (i, j), m in items:
                if not (isinstance(i, int) and isinstance(j, int)
                        and 1 <= i <= j <= n):
                    raise ValueError(f"invalid interval ({i}, {j}) for n={n}")
                if not isinstance(m, int) or m < 0:
                    raise ValueError(f"multiplicity of ({i}, {j}) must be a "
                                     f"nonnegative integer, got {m!r}")
                if m:
                    data[(i, j)] = data.get((i, j), 0) + m
        self.n = n
        self.mult = data

    def multiplicity(self, i: int, j: int) -> int:
        """Multiplicity of [i, j]; zero outside the valid triangle."""
        return self.mult.get((i, j), 0)

    def is_near_simple(self) -> bool:
        """True when only intervals of length 1 or 2 occur."""
        return all(j - i <= 1 for (i, j) in self.mult)

    def rank_tuple(self) -> "RankTuple":
        """r_ij = sum of multiplicities of the intervals containing [i, j]."""
        n = self.n
        r = {}
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                r[(i, j)] = sum(m for (k, l), m in self.mult.items()
                                if k <= i and j <= l)
        return RankTuple(n, r)

    def to_pairs(self) -> list:
        return [[i, j, self.mult[(i, j)]] for (i, j) in sorted(self.mult)]

    def __eq__(self, other):
        return (isinstance(other, Multisegment)
                and self.n == other.n and self.mult == other.mult)

    def __hash__(self):
        return hash((self.n, frozenset(self.mult.items())))

    def __repr__(self):
        body = ";".join(f"{i},{j}={m}" for (i, j), m in sorted(self.mult.items()))
        return f"Multisegment(n={self.n}, {body or '0'})"


class RankTuple:
    """A full upper-triangular tuple (r_ij)_{1 <= i <= j <= n}.

    The diagonal is stored even though tables usually omit it, because the
    multisegment <-> rank conversion needs it; text output prints the
    off-diagonal entries in the order r_12, r_13, ..., r_{n-1,n}.
    """

    __slots__ = ("n", "r")

    def __init__(self, n: int, r):
        _check_n(n)
        data = {}
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                try:
                    val = r[(i, j)]
                except KeyError:
                    raise ValueError(f"missing entry ({i}, {j}) for n={n}")
                if not isinstance(val, int) or val < 0:
                    raise ValueError(f"entry ({i}, {j}) must be a nonnegative "
                                     f"integer, got {val!r}")
                data[(i, j)] = val
        if len(r) != len(data):
            extra = set(r) - set(data)
            raise ValueError(f"unexpected entries {sorted(extra)} for n={n}")
        self.n = n
        self.r = data

    def __getitem__(self, key):
        return self.r[key]

    def value(self, i: int, j: int) -> int:
        """Entry r_ij, with the formal value 0 outside the triangle."""
        return self.r.get((i, j), 0)

    def off_diagonal(self) -> tuple:
        n = self.n
        return tuple(self.r[(i, j)]
                     for i in range(1, n + 1) for j in range(i + 1, n + 1))

    def values_ascending(self) -> tuple:
        return tuple(self.r[k] for k in sorted(self.r))

    def hat(self) -> "RankTuple":
        """The reflection involution r_ij -> r_{n+1-j, n+1-i}."""
        n = self.n
        return RankTuple(n, {(i, j): self.r[(n + 1 - j, n + 1 - i)]
                             for (i, j) in self.r})

    def geq(self, other: "RankTuple") -> bool:
        if self.n != other.n:
            raise ValueError("cannot compare rank tuples of different n")
        return all(self.r[k] >= other.r[k] for k in self.r)

    def geq_r1(self) -> bool:
        """Componentwise comparison against the threshold tuple n+1+i-j."""
        n = self.n
        return all(v >= n + 1 + i - j for (i, j), v in self.r.items())

    def to_multisegment(self) -> Multisegment:
        """Inclusion-exclusion inverse of Multisegment.rank_tuple()."""
        n = self.n
        get = self.value
        mult = {}
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                m = (get(i, j) - get(i - 1, j) - get(i, j + 1)
                     + get(i - 1, j + 1))
                if m < 0:
                    raise ValueError(
                        f"not the rank tuple of a multisegment: "
                        f"inclusion-exclusion gives {m} at ({i}, {j})")
                if m:
                    mult[(i, j)] = m
        return Multisegment(n, mult)

    def to_pairs(self) -> list:
        return [[i, j, self.r[(i, j)]] for (i, j) in sorted(self.r)]

    def sort_key(self) -> tuple:
        return self.values_ascending()

    def __eq__(self, other):
        return (isinstance(other, RankTuple)
                and self.n == other.n and self.r == other.r)

    def __hash__(self):
        return hash((self.n, self.values_ascending()))

    def __lt__(self, other):
        if not isinstance(other, RankTuple) or self.n != other.n:
            return NotImplemented
        return self.values_ascending() < other.values_ascending()

    def __repr__(self):
        return f"RankTuple(n={self.n}, off_diagonal={self.off_diagonal()})"


def path_to_multisegment(n: int, x) -> Multisegment:
    """The near-simple multisegment attached to a parameter tuple.

    Length-2 intervals get multiplicity x_k and the single points get
    multiplicity n + 1 - x_l - x_{l-1} (with the implicit zero endpoints).
    """
    x = tuple(x)
    if len(x) != n - 1:
        raise ValueError(f"expected a tuple of length {n - 1}, got {x!r}")
    xe = padded(n, x)
    mult = {}
    for k in range(1, n):
        if x[k - 1] < 0:
            raise ValueError(f"negative entry in {x!r}")
        if x[k - 1]:
            mult[(k, k + 1)] = x[k - 1]
    for l in range(1, n + 1):
        a = n + 1 - xe[l] - xe[l - 1]
        if a < 0:
            raise ValueError(
                f"{x!r} gives a negative point multiplicity at {l}")
        if a:
            mult[(l, l)] = a
    return Multisegment(n, mult)


def r1_tuple(n: int) -> RankTuple:
    """The threshold rank tuple (n + 1 + i - j)_{i <= j}."""
    _check_n(n)
    return RankTuple(n, {(i, j): n + 1 + i - j
                         for i in range(1, n + 1) for j in range(i, n + 1)})


def rank_from_motzkin(n: int, x) -> RankTuple:
    """The support rank tuple of a Motzkin path.

    r_ij = n + 1 - max over i <= k <= l <= m <= j of
    (x_{l-1} + x_l - x_{k-1} - x_m), with the implicit zero endpoints.
    The diagonal always comes out as n + 1.
    """
    if not is_motzkin_path(n, x):
        raise ValueError(f"{tuple(x)!r} is not a Motzkin path of length {n}")
    xe = padded(n, x)
    r = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            best = 0
            low_left = xe[i - 1]   # min of x_{k-1} over i <= k <= l
            for l in range(i, j + 1):
                low_left = min(low_left, xe[l - 1])
                low_right = min(xe[l:j + 1])  # min of x_m over l <= m <= j
                best = max(best, xe[l - 1] + xe[l] - low_left - low_right)
            r[(i, j)] = n + 1 - best
    return RankTuple(n, r)


# ---------------------------------------------------------------------------
# single-peak paths and the PBW locus
# ---------------------------------------------------------------------------

def has_single_peak(n: int, x) -> bool:
    """A Motzkin path weakly increasing up to some index p and weakly
    decreasing from p on.  Membership is existential over p in 1..n-1."""
    if not is_motzkin_path(n, x):
        return False
    if n == 1:
        return True
    xe = padded(n, x)
    for p in range(1, n):
        if (all(xe[s - 1] <= xe[s] for s in range(1, p + 1))
                and all(xe[t] >= xe[t + 1] for t in range(p, n))):
            return True
    return False


def single_peak_paths(n: int) -> list:
    """All single-peak Motzkin paths; there are exactly 2^(n-1) of them."""
    return [x for x in motzkin_paths(n) if has_single_peak(n, x)]


def pbw_locus_ranks(n: int) -> list:
    """The 2^(n-1) rank tuples of the locus where fibres are Schubert
    varieties: next-neighbour entries in {n, n+1} and, for longer intervals,
    r_ij = n + 1 - #{k in [i, j-1] with r_{k,k+1} = n}.

    One tuple per subset of {1, ..., n-1}; returned in bitmask order.
    """
    _check_n(n)
    out = []
    for mask in range(1 << (n - 1)):
        drops = {k for k in range(1, n) if mask >> (k - 1) & 1}
        r = {}
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                r[(i, j)] = n + 1 - sum(1 for k in drops if i <= k < j)
        out.append(RankTuple(n, r))
    return out

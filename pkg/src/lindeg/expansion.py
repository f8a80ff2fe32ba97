"""Expansion of the staircase monomial in PBW and canonical bases.

The staircase monomial is the product of divided powers of the Chevalley
generators with exponents (n, n-1, ..., 1) followed by (1, 2, ..., n).  Its
expansion is computed entirely in the coordinate space indexed by the
parameter set P(n); PBW monomials are never materialized as noncommutative
words, because closed forms exist for every structure constant needed:

* ``two_row_pbw_expansion`` expands a product of two rows of divided powers
  over PBW monomials (the rank-2 identity ``rank2_straighten`` applied
  inductively), and ``pbw_coeff`` is its staircase specialization.
* ``bar_transition_coeff`` is the closed form for the matrix of the bar
  involution on the PBW basis; it is supported on componentwise-comparable
  pairs only.
* ``canonical_transition_matrix`` solves the triangular system expressing
  bar invariance of the canonical basis: each off-diagonal entry is the
  unique element of v^-1 Z[v^-1] whose bar-antisymmetrization matches an
  already-known right-hand side, i.e. its negative-exponent part.
* ``canonical_coeffs`` back-substitutes through that unitriangular matrix,
  turning the PBW coefficients of the staircase monomial into canonical
  ones.

All coefficients are exact Laurent polynomials; every step is deterministic
(keys are processed by descending coordinate sum, ties lexicographic).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .combinatorics import leq, padded, ptuples, upper_bounds
from .laurent import ONE, ZERO, LaurentPoly, qbinom, qfact, v_power

#: v^-1 - v, the prefactor of the bar transition matrix.
_VINV_MINUS_V = LaurentPoly({-1: 1, 1: -1})


def rank2_straighten(a: int, b: int, c: int) -> dict:
    """Coefficients rewriting E_i^(a) E_{i+1}^(b) E_i^(c) in PBW order.

    Returns {r: coefficient} for 0 <= r <= min(b, c), where the r-th term is
    v^{-(b-r)(c-r)} [a+c-r choose a] E_i^(a+c-r) E_{i,i+1}^(r) E_{i+1}^(b-r).
    """
    if min(a, b, c) < 0:
        raise ValueError("exponents must be nonnegative")
    return {r: v_power(-(b - r) * (c - r)) * qbinom(a + c - r, a)
            for r in range(min(b, c) + 1)}


def two_row_pbw_expansion(e, f) -> dict:
    """Expand E_1^(f_1)...E_n^(f_n) E_1^(e_1)...E_n^(e_n) over PBW monomials.

    The PBW monomials are indexed by tuples x with 0 <= x_i <= min(e_i,
    f_{i+1}); the coefficient of x is
    v^{-sum (e_i - x_i)(f_{i+1} - x_i)} *
    prod_i [e_i + f_i - x_{i-1} - x_i choose f_i - x_{i-1}].
    Zero coefficients are dropped.
    """
    e, f = tuple(e), tuple(f)
    if len(e) != len(f):
        raise ValueError("exponent rows must have equal length")
    if any(c < 0 for c in e + f):
        raise ValueError("exponents must be nonnegative")
    n = len(e)
    out = {}
    ranges = [range(min(e[i], f[i + 1]) + 1) for i in range(n - 1)]
    for x in itertools.product(*ranges):
        xe = (0,) + x + (0,)
        exponent = -sum((e[i] - x[i]) * (f[i + 1] - x[i]) for i in range(n - 1))
        coeff = v_power(exponent)
        for k in range(1, n + 1):
            coeff = coeff * qbinom(e[k - 1] + f[k - 1] - xe[k - 1] - xe[k],
                                   f[k - 1] - xe[k - 1])
            if not coeff:
                break
        if coeff:
            out[x] = coeff
    return out


def staircase_exponents(n: int) -> tuple:
    """The two exponent rows (1, ..., n) and (n, ..., 1) of the staircase
    monomial."""
    return tuple(range(1, n + 1)), tuple(range(n, 0, -1))


def pbw_coeff(n: int, y) -> LaurentPoly:
    """Coefficient of the PBW monomial indexed by y in the staircase monomial.

    Closed form: v^{-sum (k - y_k)(n - k - y_k)} *
    prod_k [n + 1 - y_{k-1} - y_k choose k - y_k].
    """
    y = tuple(y)
    if len(y) != n - 1:
        raise ValueError(f"expected a tuple of length {n - 1}, got {y!r}")
    ye = padded(n, y)
    exponent = -sum((k - y[k - 1]) * (n - k - y[k - 1]) for k in range(1, n))
    coeff = v_power(exponent)
    for k in range(1, n + 1):
        coeff = coeff * qbinom(n + 1 - ye[k - 1] - ye[k], k - ye[k])
    return coeff


def pbw_coeff_degree(n: int, y) -> int:
    """Closed form for the top exponent of pbw_coeff(n, y):
    (1 - y_1) n + sum_k (n - k - y_k)(y_k - y_{k+1} + 1)."""
    y = tuple(y)
    if len(y) != n - 1:
        raise ValueError(f"expected a tuple of length {n - 1}, got {y!r}")
    ye = padded(n, y)
    return (1 - ye[1]) * n + sum((n - k - ye[k]) * (ye[k] - ye[k + 1] + 1)
                                 for k in range(1, n))


def pbw_coeff_degree_gap(n: int, y, z) -> int:
    """Closed form for pbw_coeff_degree(n, y) - pbw_coeff_degree(n, z):
    sum_k (z_k - y_k)(z_k - z_{k+1} + y_k - y_{k-1} + 2)."""
    y, z = tuple(y), tuple(z)
    if len(y) != n - 1 or len(z) != n - 1:
        raise ValueError("tuples must have length n - 1")
    ye, ze = padded(n, y), padded(n, z)
    return sum((ze[k] - ye[k]) * (ze[k] - ze[k + 1] + ye[k] - ye[k - 1] + 2)
               for k in range(1, n))


def bar_transition_coeff(n: int, x, y) -> LaurentPoly:
    """Coefficient of the PBW monomial y in the bar image of the PBW
    monomial x; zero unless x >= y componentwise.

    With d = x - y and a_k = n + 1 - x_{k-1} - x_k:
    v^{-(1/2) sum d_k (d_k - 1)} (v^-1 - v)^{sum d_k} prod [d_k]! *
    prod_k [a_k + d_k + d_{k-1} choose d_k] [a_k + d_{k-1} choose d_{k-1}].
    """
    x, y = tuple(x), tuple(y)
    if len(x) != n - 1 or len(y) != n - 1:
        raise ValueError("tuples must have length n - 1")
    if not leq(y, x):
        return LaurentPoly()
    if x == y:
        return ONE
    xe = padded(n, x)
    de = tuple(a - b for a, b in zip(padded(n, x), padded(n, y)))
    twice_exp = sum(d * (d - 1) for d in de)
    assert twice_exp % 2 == 0
    coeff = v_power(-twice_exp // 2) * _VINV_MINUS_V ** sum(de)
    for d in de[1:n]:
        coeff = coeff * qfact(d)
    for k in range(1, n + 1):
        a_k = n + 1 - xe[k - 1] - xe[k]
        coeff = coeff * qbinom(a_k + de[k] + de[k - 1], de[k])
        coeff = coeff * qbinom(a_k + de[k - 1], de[k - 1])
    return coeff


def _below(x):
    """All tuples 0 <= m <= x componentwise, lexicographic."""
    return itertools.product(*[range(c + 1) for c in x])


def _between(y, x):
    """All tuples y <= m <= x componentwise, lexicographic."""
    return itertools.product(*[range(a, b + 1) for a, b in zip(y, x)])


def _descending(keys):
    """Descending coordinate sum, ties in ascending lexicographic order."""
    return sorted(keys, key=lambda t: (-sum(t), t))


@lru_cache(maxsize=None)
def bar_transition_matrix(n: int) -> dict:
    """All bar-transition coefficients {(x, y): coeff} for pairs y <= x in
    the parameter set.  Treat the returned dict as read-only."""
    out = {}
    for x in ptuples(n):
        for y in _below(x):
            w = bar_transition_coeff(n, x, y)
            if w:
                out[(x, y)] = w
    return out


@lru_cache(maxsize=None)
def canonical_transition_matrix(n: int) -> dict:
    """Canonical-to-PBW transition coefficients {(x, y): coeff}, y <= x.

    Diagonal entries are 1.  Each off-diagonal entry z solves
    z - bar(z) = w(x, y) + sum over y < m < x of bar(z(x, m)) w(m, y)
    inside v^-1 Z[v^-1], i.e. z is the negative-exponent part of the right
    hand side; entries are solved for targets of descending coordinate sum
    so the needed intermediate entries always exist already.  A right-hand
    side with a constant term, or one that is not bar-antisymmetric, means
    the bar-transition closed form is broken, and raises ArithmeticError.
    Absent keys are zero.  Treat the returned dict as read-only.
    """
    w = bar_transition_matrix(n)
    out = {}
    for x in ptuples(n):
        out[(x, x)] = ONE
        bars = {}  # bar images of the entries solved so far in this column
        targets = [y for y in _below(x) if y != x]
        for y in _descending(targets):
            rhs = w.get((x, y), ZERO)
            for m in _between(y, x):
                if m == x or m == y:
                    continue
                zbar = bars.get(m)
                if zbar is not None:
                    wmy = w.get((m, y))
                    if wmy is not None:
                        rhs = rhs + zbar * wmy
            if rhs.coefficient(0) or rhs.bar() != -rhs:
                raise ArithmeticError(
                    f"bar-antisymmetry failed solving entry ({x}, {y}) at "
                    f"n={n}: rhs = {rhs}")
            z = rhs.negative_part()
            if z:
                out[(x, y)] = z
                bars[y] = z.bar()
    return out


@lru_cache(maxsize=None)
def canonical_coeffs(n: int) -> dict:
    """Canonical-basis coefficients {y: coeff} of the staircase monomial.

    Back-substitution through the unitriangular canonical-to-PBW matrix:
    starting from the maximal parameter tuple, coeff(y) is the PBW
    coefficient of y minus the already-known contributions of all larger
    keys.  Zero coefficients are dropped.  Treat the returned dict as
    read-only.
    """
    zeta = canonical_transition_matrix(n)
    bounds = upper_bounds(n)
    out = {}
    for y in _descending(ptuples(n)):
        acc = pbw_coeff(n, y)
        for x in _between(y, bounds):
            if x == y:
                continue
            mu_x = out.get(x)
            if mu_x is None:
                continue
            z = zeta.get((x, y))
            if z is not None:
                acc = acc - mu_x * z
        if acc:
            out[y] = acc
    return out

"""Two independent computations of the support set, and their comparison.

The support set of the degeneration family is computed along two fully
separate pipelines and compared:

* combinatorial prediction: the rank tuples of all Motzkin paths
  (``predicted_supports``);
* algebraic computation: expand the staircase monomial in the canonical
  basis, attach to every surviving parameter tuple the dual rank tuple of
  its multisegment, and keep the tuples above the threshold
  (``computed_supports``).

``verify_supports`` runs the comparison plus the finer per-element,
PBW-locus and involution checks and returns a structured report.  The only
code shared between the two pipelines is the Laurent coefficient ring and
the plain container types.
"""

from __future__ import annotations

from decimal import Decimal, localcontext

from .combinatorics import (
    bell_number,
    motzkin_number,
    motzkin_paths,
    pbw_locus_ranks,
    ptuples,
    rank_from_motzkin,
    single_peak_paths,
)
from .duality import dual_rank_tuple, next_neighbor_rank
from .expansion import canonical_coeffs


def predicted_supports(n: int) -> list:
    """Support set predicted from Motzkin combinatorics, canonically sorted."""
    found = {rank_from_motzkin(n, x) for x in motzkin_paths(n)}
    return sorted(found, key=lambda r: r.sort_key())


def computed_supports(n: int) -> list:
    """Support set computed from the canonical expansion, canonically sorted.

    Keep the dual rank tuple of every parameter tuple with nonzero canonical
    coefficient, filtered by the full componentwise threshold comparison.
    """
    coeffs = canonical_coeffs(n)
    found = set()
    for y in coeffs:
        rt = dual_rank_tuple(n, y)
        if rt.geq_r1():
            found.add(rt)
    return sorted(found, key=lambda r: r.sort_key())


def _check(name: str, ok: bool, detail: str) -> dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


def verify_supports(n: int) -> dict:
    """Cross-check the two support pipelines and the related structure.

    Returns {"n", "motzkin_count", "supports", "checks"} where supports is
    the canonical sorted list of RankTuple and checks is a list of
    {"name", "pass", "detail"} entries.
    """
    predicted = predicted_supports(n)
    computed = computed_supports(n)
    pred_set, comp_set = set(predicted), set(computed)
    checks = []

    checks.append(_check(
        "set_equality",
        comp_set == pred_set,
        f"algebraic pipeline found {len(comp_set)} tuples, "
        f"combinatorial pipeline {len(pred_set)}"))

    coeffs = canonical_coeffs(n)
    survivors = {y for y in coeffs if dual_rank_tuple(n, y).geq_r1()}
    motzkin = set(motzkin_paths(n))
    checks.append(_check(
        "per_element_motzkin",
        survivors == motzkin,
        f"{len(survivors)} surviving parameter tuples vs "
        f"{len(motzkin)} Motzkin paths"))

    pbw = set(pbw_locus_ranks(n))
    checks.append(_check(
        "pbw_in_supports",
        pbw <= pred_set,
        f"{len(pbw & pred_set)} of {len(pbw)} PBW-locus tuples are supports"))

    peaks = single_peak_paths(n)
    images = [rank_from_motzkin(n, x) for x in peaks]
    checks.append(_check(
        "single_peak_bijection",
        len(set(images)) == len(peaks) and set(images) == pbw,
        f"{len(peaks)} single-peak paths onto {len(pbw)} PBW-locus tuples"))

    reduction_ok = all(
        dual_rank_tuple(n, y).geq_r1()
        == all(next_neighbor_rank(n, y, i) >= n for i in range(1, n))
        for y in ptuples(n))
    checks.append(_check(
        "filter_reduction",
        reduction_ok,
        "full threshold comparison agrees with the next-neighbour test on "
        "every parameter tuple"))

    checks.append(_check(
        "hat_invariance",
        {rt.hat() for rt in pred_set} == pred_set,
        "support set is stable under the reflection involution"))

    checks.append(_check(
        "support_count",
        len(pred_set) == motzkin_number(n),
        f"{len(pred_set)} supports vs Motzkin number {motzkin_number(n)}"))

    return {
        "n": n,
        "motzkin_count": motzkin_number(n),
        "supports": predicted,
        "checks": checks,
    }


def all_checks_pass(report: dict) -> bool:
    return all(c["pass"] for c in report["checks"])


def ratio_string(num: int, den: int, digits: int = 20) -> str:
    """Decimal rendering of an exact integer quotient at a fixed number of
    significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        s = str(Decimal(num) / Decimal(den))
    if "." not in s and "E" not in s and "e" not in s:
        s += ".0"
    return s


def asymptotics_report(max_n: int) -> list:
    """Rows (n, motzkin_number, bell_number, ratio) for n = 1..max_n.

    The counts are exact big integers; the ratio column renders the exact
    quotient at 20 significant digits.  The ratio is strictly decreasing
    from n = 4 on and vanishes exponentially fast.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = []
    for n in range(1, max_n + 1):
        m, b = motzkin_number(n), bell_number(n)
        rows.append((n, m, b, ratio_string(m, b)))
    return rows

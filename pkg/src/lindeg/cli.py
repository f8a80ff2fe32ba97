"""Command-line surface: deterministic text, JSON and CSV reports.

Subcommands: supports, expand, motzkin, dual, verify, asymptotics.
Exit codes: 0 on success, 1 on failed verification, 2 on usage errors.
Output is byte-identical across runs with identical arguments; the cost
warning for a raised size cap goes to standard error so it never perturbs
the report stream.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .combinatorics import (
    Multisegment,
    RankTuple,
    motzkin_number,
    motzkin_paths,
    path_to_multisegment,
)
from .duality import dual_rank_tuple, dual_rank_tuple_general, kz_rank_near_simple
from .expansion import canonical_coeffs
from .laurent import LaurentPoly, qbinom, qfact, qint
from .supports import (
    all_checks_pass,
    asymptotics_report,
    predicted_supports,
    verify_supports,
)

#: Subcommands refuse n above this unless --max-n raises the cap; the
#: expansion engine cost grows quickly with the parameter set.
DEFAULT_MAX_N = 8


def tup(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def segments_str(m: Multisegment) -> str:
    if not m.mult:
        return "0"
    return ";".join(f"{i},{j}={v}" for (i, j), v in sorted(m.mult.items()))


def ranks_str(rt: RankTuple) -> str:
    return ";".join(f"{i},{j}={v}" for (i, j), v in sorted(rt.r.items()))


def parse_multisegment(text: str, n: int | None) -> Multisegment:
    entries = []
    body = text.strip()
    if body not in ("", "0"):
        for item in body.split(";"):
            item = item.strip()
            try:
                left, value = item.split("=")
                i_s, j_s = left.split(",")
                entries.append(((int(i_s), int(j_s)), int(value)))
            except ValueError:
                raise ValueError(f"cannot parse multisegment entry {item!r}; "
                                 "expected i,j=mult")
    if n is None:
        if not entries:
            raise ValueError("empty multisegment needs an explicit --n")
        n = max(j for (_, j), _ in entries)
    return Multisegment(n, entries)


# ---------------------------------------------------------------------------
# quantum-symbol display of coefficients
# ---------------------------------------------------------------------------

def quantum_label(p: LaurentPoly) -> str:
    """Factored display when p is a quantum factorial, a product of quantum
    integers, or a single quantum binomial; expanded form otherwise.
    Detection is by exact division only."""
    if not p:
        return "0"
    if p == 1:
        return "1"
    deg = p.degree()
    if deg <= 0:
        return str(p)
    # quantum factorial: the degree determines the only candidate
    k = 2
    while k * (k - 1) // 2 < deg:
        k += 1
    if k * (k - 1) // 2 == deg and p == qfact(k):
        return f"[{k}]!"
    # complete product of quantum integers, largest factors first
    work = p
    factors = []
    for k in range(deg + 1, 1, -1):
        while work.at_one() % k == 0 and work.divisible_by(qint(k)):
            work = work.exact_div(qint(k))
            factors.append(k)
            if work == 1:
                return "".join(f"[{f}]" for f in factors)
    # single quantum binomial
    for a in range(2, deg + 2):
        for b in range(1, a // 2 + 1):
            if b * (a - b) == deg and p == qbinom(a, b):
                return f"[{a} choose {b}]"
    return str(p)


# ---------------------------------------------------------------------------
# writers
# ---------------------------------------------------------------------------

def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _rank_json(rt: RankTuple) -> dict:
    return {"n": rt.n, "r": rt.to_pairs()}


def cmd_supports(args) -> int:
    n = args.n
    sup = predicted_supports(n)
    if args.format == "json":
        _emit_json({"n": n, "count": len(sup),
                    "supports": [_rank_json(rt) for rt in sup]})
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow([f"r_{i}_{j}" for i in range(1, n + 1)
                    for j in range(i + 1, n + 1)])
        for rt in sup:
            w.writerow(list(rt.off_diagonal()))
    else:
        print(f"supports n={n}: {len(sup)} rank tuples "
              f"(Motzkin number {motzkin_number(n)})")
        for rt in sup:
            print(tup(rt.off_diagonal()))
    return 0


def cmd_motzkin(args) -> int:
    n = args.n
    paths = motzkin_paths(n)
    if args.format == "json":
        _emit_json({"n": n, "count": len(paths),
                    "paths": [list(x) for x in paths]})
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow([f"x_{k}" for k in range(1, n)])
        for x in paths:
            w.writerow(list(x))
    else:
        print(f"motzkin n={n}: {len(paths)} paths")
        for x in paths:
            print(tup(x))
    return 0


def _expansion_rows(n: int):
    coeffs = canonical_coeffs(n)
    for y in sorted(coeffs, reverse=True):
        yield y, path_to_multisegment(n, y), dual_rank_tuple(n, y), coeffs[y]


def cmd_expand(args) -> int:
    n = args.n
    rows = list(_expansion_rows(n))
    if args.format == "json":
        _emit_json({"n": n, "terms": [
            {"y": list(y), "multisegment": m.to_pairs(),
             "rank": _rank_json(rt), "coefficient": c.to_pairs()}
            for y, m, rt, c in rows]})
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["y", "multisegment", "rank", "coefficient"])
        for y, m, rt, c in rows:
            w.writerow([" ".join(map(str, y)), segments_str(m),
                        " ".join(map(str, rt.off_diagonal())),
                        json.dumps(c.to_pairs())])
    else:
        print(f"expansion n={n}: {len(rows)} terms")
        for y, m, rt, c in rows:
            label = str(c) if args.expanded else quantum_label(c)
            print(f"y={tup(y)}  segments=[{segments_str(m)}]  "
                  f"rank={tup(rt.off_diagonal())}  coeff={label}")
    return 0


def cmd_verify(args) -> int:
    n = args.n
    report = verify_supports(n)
    ok = all_checks_pass(report)
    if args.format == "json":
        _emit_json({
            "n": report["n"],
            "motzkin_count": report["motzkin_count"],
            "supports": [_rank_json(rt) for rt in report["supports"]],
            "checks": report["checks"],
        })
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["name", "pass", "detail"])
        for c in report["checks"]:
            w.writerow([c["name"], str(c["pass"]).lower(), c["detail"]])
    else:
        print(f"verify n={n}: {len(report['supports'])} supports "
              f"(Motzkin number {report['motzkin_count']})")
        for rt in report["supports"]:
            print(tup(rt.off_diagonal()))
        for c in report["checks"]:
            word = "PASS" if c["pass"] else "FAIL"
            print(f"check {c['name']}: {word} ({c['detail']})")
        passed = sum(1 for c in report["checks"] if c["pass"])
        print(f"result: {'PASS' if ok else 'FAIL'} "
              f"({passed}/{len(report['checks'])} checks)")
    return 0 if ok else 1


def cmd_dual(args) -> int:
    try:
        m = parse_multisegment(args.multisegment, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if m.n > args.cap:
        print(f"error: n={m.n} exceeds the size cap {args.cap}; "
              f"pass --max-n {m.n} to override", file=sys.stderr)
        return 2
    general = dual_rank_tuple_general(m)
    near = None
    if m.is_near_simple():
        near = RankTuple(m.n, {(i, j): kz_rank_near_simple(m, i, j)
                               for i in range(1, m.n + 1)
                               for j in range(i, m.n + 1)})
    match = None if near is None else (near == general)
    if args.format == "json":
        _emit_json({
            "n": m.n,
            "multisegment": m.to_pairs(),
            "general": _rank_json(general),
            "near_simple": None if near is None else _rank_json(near),
            "match": match,
        })
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["formula", "ranks"])
        w.writerow(["general", ranks_str(general)])
        if near is not None:
            w.writerow(["near-simple", ranks_str(near)])
    else:
        print(f"dual n={m.n}: {segments_str(m)}")
        print(f"general: {ranks_str(general)}")
        if near is None:
            print("near-simple: n/a (a segment of length 3 or more is present)")
        else:
            print(f"near-simple: {ranks_str(near)}")
            print(f"match: {'yes' if match else 'MISMATCH'}")
    if match is False:
        print("internal error: the closed form disagrees with the "
              "brute-force duality formula", file=sys.stderr)
        return 1
    return 0


def cmd_asymptotics(args) -> int:
    rows = asymptotics_report(args.max_n)
    if args.format == "json":
        _emit_json({"max_n": args.max_n, "rows": [
            {"n": n, "motzkin": str(m), "bell": str(b), "ratio": r}
            for n, m, b, r in rows]})
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["n", "motzkin", "bell", "ratio"])
        for n, m, b, r in rows:
            w.writerow([n, m, b, r])
    else:
        print("n  motzkin  bell  ratio")
        for n, m, b, r in rows:
            print(f"{n}  {m}  {b}  {r}")
    return 0


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"],
                        default="text", help="output format")
    common.add_argument("--max-n", type=int, default=None, metavar="K",
                        help=f"raise the size cap above the default "
                             f"{DEFAULT_MAX_N} (expect long runtimes)")

    parser = argparse.ArgumentParser(
        prog="lindeg",
        description="Exact canonical-basis expansions, multisegment duality "
                    "and Motzkin support sets for linear degenerations of "
                    "flag varieties.")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("supports", parents=[common],
                       help="support rank tuples for a given n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_supports, sized=True)

    p = sub.add_parser("expand", parents=[common],
                       help="canonical expansion of the staircase monomial")
    p.add_argument("n", type=int)
    p.add_argument("--expanded", action="store_true",
                   help="print coefficients as expanded Laurent polynomials")
    p.set_defaults(func=cmd_expand, sized=True)

    p = sub.add_parser("motzkin", parents=[common],
                       help="enumerate Motzkin paths")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_motzkin, sized=True)

    p = sub.add_parser("dual", parents=[common],
                       help="dual rank tuple of a multisegment "
                            "(format: 'i,j=mult;i,j=mult;...')")
    p.add_argument("multisegment")
    p.add_argument("--n", type=int, default=None,
                   help="ambient n (default: largest right endpoint)")
    p.set_defaults(func=cmd_dual, sized=True)

    p = sub.add_parser("verify", parents=[common],
                       help="cross-check the two support pipelines")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_verify, sized=True)

    p = sub.add_parser("asymptotics", parents=[common],
                       help="Motzkin vs Bell counting table")
    p.add_argument("max_n", type=int)
    p.set_defaults(func=cmd_asymptotics, sized=False)

    return parser


def _size_limit(args) -> int | None:
    cap = DEFAULT_MAX_N
    if args.max_n is not None:
        if args.max_n < 1:
            return None
        if args.max_n > DEFAULT_MAX_N:
            print(f"warning: size cap raised to {args.max_n}; expansion cost "
                  f"grows rapidly with n", file=sys.stderr)
        cap = args.max_n
    return cap


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    if args.command == "asymptotics":
        if args.max_n < 1:
            print("error: max_n must be at least 1", file=sys.stderr)
            return 2
        return args.func(args)
    cap = _size_limit(args)
    if cap is None:
        print("error: --max-n must be at least 1", file=sys.stderr)
        return 2
    args.cap = cap
    n = args.n
    if args.command == "dual":
        if n is not None and n < 1:
            print("error: --n must be at least 1", file=sys.stderr)
            return 2
    else:
        if n < 1:
            print("error: n must be at least 1", file=sys.stderr)
            return 2
        if n > cap:
            print(f"error: n={n} exceeds the size cap {cap}; "
                  f"pass --max-n {n} to override", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())

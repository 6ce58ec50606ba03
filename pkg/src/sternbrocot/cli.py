"""Command-line front end.

Output is deterministic byte-for-byte for a given command: plain formats
are whitespace-separated text, jsonl formats emit one self-contained JSON
object per line with every big integer serialised as a decimal string.

Exit codes: 0 on success, 1 on domain errors (one-line message on stderr,
also used when ``verify`` finds a counterexample), 2 on usage errors.
"""

import argparse
import json
import sys

from .brocot import brocot_table
from .core import gcd, gcd_traced
from .distributivity import (
    FIBONACCI,
    check_lemma_condition,
    distributes_over_gcd,
    fib_witness,
    linear_witness,
    mersenne,
    mersenne_witness,
    times,
)
from .eisenstein import ei_enumerate, ei_rows
from .enumeration import (
    EISENSTEIN_STERN,
    NEWMAN,
    ORDERS,
    STERN_BROCOT,
    enumerate_rationals,
    tree_levels,
)
from .identities import (
    IdentityReport,
    check_coprime_absorb,
    check_euclids_lemma,
    check_gcd_mult,
    check_lattice_gcd,
    check_scaling,
)
from .matrices import bezout

COUNT_CAP = 2**31
IDENTITY_BOUND_CAP = 24
DISTRIBUTIVITY_BOUND_CAP = 40
ENUMERATION_BOUND_CAP = 2**20
DEFAULT_BOUNDS = {"identities": 12, "distributivity": 24, "enumeration": 4096}


def main(argv: "list[str] | None" = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sternbrocot",
        description="Exact gcd machinery, rational enumeration, and Brocot approximation tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gcd", help="greatest common divisor of two naturals")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--trace", action="store_true", help="print each subtractive step as (x, y)")
    p.add_argument("--bezout", action="store_true", help="print g = m*(a) + n*(b) instead of g")
    p.set_defaults(handler=_cmd_gcd)

    p = sub.add_parser("enumerate", help="stream positive rationals in a chosen order")
    p.add_argument("--order", choices=ORDERS, required=True)
    p.add_argument("--count", type=int, required=True, help=f"how many to emit (max {COUNT_CAP})")
    p.add_argument("--format", choices=("plain", "jsonl"), default="plain")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("tree", help="print whole tree levels of rationals")
    p.add_argument("--order", choices=ORDERS, required=True)
    p.add_argument("--depth", type=int, required=True, help="deepest level to print (max 20)")
    p.add_argument("--format", choices=("plain", "jsonl"), default="plain")
    p.set_defaults(handler=_cmd_tree)

    p = sub.add_parser("ei", help="Eisenstein array rows or streamed adjacent pairs")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rows", type=int, metavar="K", help="print rows 0..K (max 20)")
    group.add_argument("--pairs", type=int, metavar="C", help=f"stream C adjacent pairs (max {COUNT_CAP})")
    p.add_argument("--jsonl", action="store_true")
    p.set_defaults(handler=_cmd_ei)

    p = sub.add_parser("brocot", help="approximation table for a target ratio N/D")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("d", type=int, metavar="D")
    p.add_argument("--max-den", type=int, default=None, help="largest admissible denominator")
    p.add_argument("--jsonl", action="store_true")
    p.set_defaults(handler=_cmd_brocot)

    p = sub.add_parser("verify", help="run an exhaustive check suite; nonzero exit on counterexample")
    p.add_argument("--suite", choices=("identities", "distributivity", "enumeration"), required=True)
    p.add_argument("--bound", type=int, default=None, help="range bound / item count per suite")
    p.set_defaults(handler=_cmd_verify)

    return parser


def _cmd_gcd(args: argparse.Namespace) -> int:
    if args.trace:
        for x, y in gcd_traced(args.m, args.n).steps:
            print(f"({x}, {y})")
    if args.bezout:
        cert = bezout(args.m, args.n)
        print(f"{cert.g} = {args.m}*({cert.a}) + {args.n}*({cert.b})")
    else:
        print(gcd(args.m, args.n))
    return 0


def _check_count(count: int) -> None:
    if count < 0 or count > COUNT_CAP:
        raise ValueError(f"count must be between 0 and {COUNT_CAP}")


def _cmd_enumerate(args: argparse.Namespace) -> int:
    _check_count(args.count)
    stream = enumerate_rationals(args.order, args.count)
    if args.format == "jsonl":
        for index, r in enumerate(stream):
            print(json.dumps({"index": index, "num": str(r.num), "den": str(r.den)}))
    else:
        for r in stream:
            print(r)
    return 0


def _cmd_tree(args: argparse.Namespace) -> int:
    levels = tree_levels(args.order, args.depth)
    if args.format == "jsonl":
        for depth, level in enumerate(levels):
            for index, r in enumerate(level):
                print(json.dumps(
                    {"level": depth, "index": index, "num": str(r.num), "den": str(r.den)}
                ))
    else:
        for level in levels:
            print(" ".join(str(r) for r in level))
    return 0


def _cmd_ei(args: argparse.Namespace) -> int:
    if args.rows is not None:
        rows = ei_rows(args.m, args.n, args.rows)
        if args.jsonl:
            for index, row in enumerate(rows):
                print(json.dumps({"row": index, "entries": [str(e) for e in row]}))
        else:
            for row in rows:
                print(" ".join(str(e) for e in row))
    else:
        _check_count(args.pairs)
        pairs = ei_enumerate(args.m, args.n, args.pairs)
        if args.jsonl:
            for index, (a, b) in enumerate(pairs):
                print(json.dumps({"index": index, "a": str(a), "b": str(b)}))
        else:
            for a, b in pairs:
                print(f"{a} {b}")
    return 0


def _cmd_brocot(args: argparse.Namespace) -> int:
    table = brocot_table(args.n, args.d, args.max_den)
    if args.jsonl:
        for row in table.rows:
            print(json.dumps({"p": str(row.p), "q": str(row.q), "e": str(row.e)}))
    else:
        for row in table.rows:
            e = f"{row.e:+d}" if row.e else "0"
            print(f"{row.p} {row.q} {e}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    bound = args.bound if args.bound is not None else DEFAULT_BOUNDS[args.suite]
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if args.suite == "identities":
        if bound > IDENTITY_BOUND_CAP:
            raise ValueError(f"identities bound capped at {IDENTITY_BOUND_CAP} (checks are quartic)")
        reports = _verify_identities(bound)
    elif args.suite == "distributivity":
        if bound > DISTRIBUTIVITY_BOUND_CAP:
            raise ValueError(
                f"distributivity bound capped at {DISTRIBUTIVITY_BOUND_CAP} (values grow fast)"
            )
        reports = _verify_distributivity(bound)
    else:
        if bound > ENUMERATION_BOUND_CAP:
            raise ValueError(f"enumeration bound capped at {ENUMERATION_BOUND_CAP}")
        reports = _verify_enumeration(bound)
    failed = False
    for report in reports:
        print(report.summary())
        failed = failed or not report.ok
    return 1 if failed else 0


def _verify_identities(bound: int) -> "list[IdentityReport]":
    return [
        check_gcd_mult(bound),
        check_euclids_lemma(bound),
        check_scaling(bound),
        check_coprime_absorb(bound),
        check_lattice_gcd(bound),
    ]


def _verify_distributivity(bound: int) -> "list[IdentityReport]":
    reports = [distributes_over_gcd(FIBONACCI, bound)]
    for k in (2, 3, 5):
        reports.append(distributes_over_gcd(mersenne(k), bound))
    reports.append(distributes_over_gcd(times(7), bound))
    reports.append(check_lemma_condition(FIBONACCI, fib_witness, bound))
    reports.append(check_lemma_condition(mersenne(2), mersenne_witness(2), bound))
    reports.append(check_lemma_condition(times(7), linear_witness, bound))
    return reports


def _verify_enumeration(count: int) -> "list[IdentityReport]":
    from math import gcd as fast_gcd

    reports = []

    report = IdentityReport("eisenstein-stern-equals-newman", count)
    matrix_stream = enumerate_rationals(EISENSTEIN_STERN, count)
    newman_stream = enumerate_rationals(NEWMAN, count)
    for index, (a, b) in enumerate(zip(matrix_stream, newman_stream)):
        report.record((index, str(a), str(b)), a == b)
    reports.append(report)

    report = IdentityReport("lowest-form-no-duplicates", count)
    for order in ORDERS:
        seen = set()
        for index, r in enumerate(enumerate_rationals(order, count)):
            ok = fast_gcd(r.num, r.den) == 1 and (r.num, r.den) not in seen
            seen.add((r.num, r.den))
            report.record((order, index, str(r)), ok)
    reports.append(report)

    # Deepest full tree that fits in `count` outputs, capped at 10.
    depth = 0
    while 2 ** (depth + 2) - 1 <= count and depth < 10:
        depth += 1
    sb_levels = tree_levels(STERN_BROCOT, depth)
    es_levels = tree_levels(EISENSTEIN_STERN, depth)

    report = IdentityReport("stern-brocot-matches-mediant-insertion", depth)
    for k, (level, expected) in enumerate(zip(sb_levels, _mediant_insertion_levels(depth))):
        report.record((k,), [(r.num, r.den) for r in level] == expected)
    reports.append(report)

    report = IdentityReport("eisenstein-stern-matches-child-rule-bfs", depth)
    for k, (level, expected) in enumerate(zip(es_levels, _child_rule_levels(depth))):
        report.record((k,), [(r.num, r.den) for r in level] == expected)
    reports.append(report)

    report = IdentityReport("stern-brocot-levels-ascending", depth)
    for k, level in enumerate(sb_levels):
        report.record((k,), all(a < b for a, b in zip(level, level[1:])))
    reports.append(report)

    report = IdentityReport("small-rationals-complete", 12)
    expected_pairs = {
        (p, q)
        for p in range(1, 12)
        for q in range(1, 12)
        if p + q <= 12 and fast_gcd(p, q) == 1
    }
    for order in ORDERS:
        emitted = {(r.num, r.den) for r in enumerate_rationals(order, 2**11 - 1)}
        report.record((order,), expected_pairs <= emitted)
    reports.append(report)

    return reports


def _mediant_insertion_levels(depth: int) -> "list[list[tuple[int, int]]]":
    """Independent tree oracle: repeated mediant insertion from 0/1, 1/0."""
    fringe = [(0, 1), (1, 0)]
    levels = []
    for _ in range(depth + 1):
        inserted = []
        grown = [fringe[0]]
        for (p1, q1), (p2, q2) in zip(fringe, fringe[1:]):
            mid = (p1 + p2, q1 + q2)
            inserted.append(mid)
            grown.append(mid)
            grown.append((p2, q2))
        levels.append(inserted)
        fringe = grown
    return levels


def _child_rule_levels(depth: int) -> "list[list[tuple[int, int]]]":
    """Independent tree oracle: breadth-first a/b -> a/(a+b), (a+b)/b."""
    level = [(1, 1)]
    levels = [level]
    for _ in range(depth):
        level = [pair for a, b in level for pair in ((a, a + b), (a + b, b))]
        levels.append(level)
    return levels


if __name__ == "__main__":
    sys.exit(main())

"""Eisenstein arrays: rows grown by pairwise-sum insertion.

Ei(m, n) starts from the row [m, n]; each following row keeps every entry
and inserts the sum of each adjacent pair between them, so row k has
2^k + 1 entries.  Structural laws verified by the test suite:

- any three consecutive entries a, b, c of one row (triples never cross a
  row boundary) satisfy c = (2t+1)*b - a for a natural t, so b divides
  a + c; for Ei(1, 1) that t is exactly floor(a/b);
- adjacent pairs of Ei(1, 1), read as fractions a/b, are the
  Eisenstein-Stern tree level by level, each coprime pair occurring once;
- every entry is linear in the seeds, which lets :func:`ei_enumerate`
  stream the pairs of Ei(m, n) from the same one-matrix walk that drives
  the rational enumerators, with no rows materialised.
"""

from dataclasses import dataclass
from typing import Iterator, Sequence

from .enumeration import EISENSTEIN_STERN, Rational, enum_step, tree_levels
from .matrices import IDENTITY

MAX_ROW_DEPTH = 20


def ei_rows(m: int, n: int, depth: int) -> list[list[int]]:
    """Rows 0..depth of Ei(m, n) by direct insertion.

    Row k has 2^k + 1 entries, so the depth is capped to keep the result
    materialisable; use :func:`ei_enumerate` for the streaming path.
    """
    if m < 0 or n < 0:
        raise ValueError("seeds must be naturals")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth > MAX_ROW_DEPTH:
        raise ValueError(f"row too large: depth {depth} exceeds {MAX_ROW_DEPTH}")
    rows = [[m, n]]
    for _ in range(depth):
        prev = rows[-1]
        row = [prev[0]]
        for left, right in zip(prev, prev[1:]):
            row.append(left + right)
            row.append(right)
        rows.append(row)
    return rows


@dataclass(frozen=True)
class EiTriple:
    """Consecutive entries (a, b, c) of one row with c = (2t+1)*b - a."""

    a: int
    b: int
    c: int
    t: int


def ei_triples(row: Sequence[int]) -> list[EiTriple]:
    """All consecutive triples of one row, each with t solved exactly.

    A triple that does not fit the form would mean the row was not built
    by pairwise-sum insertion; that is an error, not something to floor
    away.  The all-zero row of Ei(0, 0) is the one degenerate case: its
    triples satisfy the form for every t, recorded as t = 0.
    """
    if len(row) < 3:
        raise ValueError("need at least three entries to form a triple")
    triples = []
    for a, b, c in zip(row, row[1:], row[2:]):
        if b == 0:
            if a == 0 and c == 0:
                triples.append(EiTriple(a, b, c, 0))
                continue
            raise ValueError(f"triple law violated at ({a}, {b}, {c})")
        folded = a + c - b
        if folded < 0 or folded % (2 * b) != 0:
            raise ValueError(f"triple law violated at ({a}, {b}, {c})")
        triples.append(EiTriple(a, b, c, folded // (2 * b)))
    return triples


def ei_pairs_equal_tree(depth: int) -> bool:
    """Do the adjacent pairs of Ei(1, 1), read as fractions, match the tree?

    Compares row k's pairs a/b, left to right, against level k of the
    Eisenstein-Stern tree for all k <= depth.
    """
    rows = ei_rows(1, 1, depth)
    levels = tree_levels(EISENSTEIN_STERN, depth)
    for row, level in zip(rows, levels):
        pairs = [Rational(a, b) for a, b in zip(row, row[1:])]
        if pairs != level:
            return False
    return True


def ei_enumerate(m: int, n: int, count: int) -> Iterator[tuple[int, int]]:
    """Adjacent pairs of Ei(m, n) in row-major order, no rows materialised.

    Every array entry is a fixed linear combination of the seeds, so the
    pair at each tree position is read off the enumerator matrix.  The
    matrix walk traverses each level as the mirror image of the row, so
    the coefficients are taken against (n m) and the components emitted
    swapped, which restores left-to-right row order.
    """
    if m < 1 or n < 1:
        raise ValueError("ei_enumerate requires positive seeds")
    if count < 0:
        raise ValueError("count must be >= 0")
    d = IDENTITY
    for _ in range(count):
        yield n * d.e01 + m * d.e11, n * d.e00 + m * d.e10
        d = enum_step(d)

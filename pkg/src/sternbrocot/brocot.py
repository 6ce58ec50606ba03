"""Approximation of a target ratio by mediants, gear-train style.

To approximate N/D by ratios with small terms, bracket it between the
integer ratios floor(N/D)/1 and (floor(N/D)+1)/1, then repeatedly insert
the mediant (p+p')/(q+q') of the bracketing pair.  Each table row carries
the signed error e = p*D - q*N, and the mediant's error is simply the sum
of its parents' errors, so the whole table is built with additions.  The
pair bracketing the target always consists of adjacent rows with errors of
opposite sign, and it contains the row of smallest |e| seen so far.

Construction stops when the error hits zero (the reduced target itself) or
when the next mediant's denominator would exceed a bound; the bracketing
rows at that point are the best approximations below and above the target
among all admissible denominators.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class BrocotRow:
    """One table row: ratio p/q with signed error e = p*D - q*N."""

    p: int
    q: int
    e: int


@dataclass(frozen=True)
class BrocotTable:
    """Approximation table for the ratio num/den.

    ``rows`` is sorted ascending by value; ``inserted`` holds the mediant
    rows in creation order (the two integer seed rows are not insertions).
    """

    num: int
    den: int
    rows: tuple[BrocotRow, ...]
    inserted: tuple[BrocotRow, ...]

    @property
    def exact(self) -> "BrocotRow | None":
        for row in self.rows:
            if row.e == 0:
                return row
        return None


def mediant(r1, r2) -> tuple[int, int]:
    """Component-wise sum (p+p', q+q'); the result is NOT reduced.

    Mediants of tree-adjacent fractions do come out in lowest form, but
    that is the neighbours' unimodularity at work, not this function's:
    mediant(a/b, a/b) = 2a/2b.  Accepts (num, den) pairs or any object
    with num/den attributes, including the formal endpoints 0/1 and 1/0.
    """
    p1, q1 = _pair(r1)
    p2, q2 = _pair(r2)
    return p1 + p2, q1 + q2


def _pair(r) -> tuple[int, int]:
    num = getattr(r, "num", None)
    if num is not None:
        return num, r.den
    p, q = r
    return p, q


def brocot_table(n: int, d: int, max_den: "int | None" = None) -> BrocotTable:
    """Build the approximation table for the target ratio n/d.

    Starting rows are the integer bracket (floor(n/d), 1) and
    (floor(n/d) + 1, 1); each iteration inserts the mediant of the current
    bracketing pair and narrows the bracket toward the target.  Stops on
    error zero, or just before a mediant whose denominator would exceed
    ``max_den``.  An integer target short-circuits to its single exact row.
    A 0/1 row can appear for targets below one; it is a formal endpoint,
    not an approximation.
    """
    if n < 1 or d < 1:
        raise ValueError("target ratio needs a positive numerator and denominator")
    if max_den is not None and max_den < 1:
        raise ValueError("max_den must be >= 1")
    if n % d == 0:
        row = BrocotRow(n // d, 1, 0)
        return BrocotTable(n, d, (row,), ())
    k = n // d
    lo = BrocotRow(k, 1, k * d - n)
    hi = BrocotRow(k + 1, 1, (k + 1) * d - n)
    below = [lo]
    above = [hi]
    inserted: list[BrocotRow] = []
    exact_row = None
    while True:
        q = lo.q + hi.q
        if max_den is not None and q > max_den:
            break
        row = BrocotRow(lo.p + hi.p, q, lo.e + hi.e)
        inserted.append(row)
        if row.e == 0:
            exact_row = row
            break
        if row.e < 0:
            lo = row
            below.append(row)
        else:
            hi = row
            above.append(row)
    # Lows were appended in ascending order and highs in descending order,
    # so the sorted table needs no comparison-based sort.
    rows = below + ([exact_row] if exact_row is not None else []) + above[::-1]
    return BrocotTable(n, d, tuple(rows), tuple(inserted))


def best_bracket(n: int, d: int, max_den: int):
    """Best approximations to n/d among denominators q <= max_den.

    Returns the exact reduced row alone when it fits the bound, otherwise
    the (lower, upper) pair of closest table rows below and above the
    target.  A 0/q endpoint is never returned as an approximation; when
    the target is smaller than every admissible positive ratio the lower
    side is None.
    """
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    table = brocot_table(n, d, max_den)
    exact = table.exact
    if exact is not None:
        return exact
    # Rows are sorted, so the bracketing pair is the last row below the
    # target and the first row above it.
    below = [row for row in table.rows if row.e < 0 and row.p > 0]
    above = [row for row in table.rows if row.e > 0]
    lower = below[-1] if below else None
    return lower, above[0]

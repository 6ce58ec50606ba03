"""Constant-state enumeration of the positive rationals.

One loop drives every order.  The state is a single 2x2 matrix D, a finite
product of L and R; stepping D visits all such products level by level,
each level in the lexicographic order of the words.  Column sums of D give
the Eisenstein-Stern (aka Calkin-Wilf) rational, row sums give the
Stern-Brocot rational, and collapsing the state to those two column sums
turns the very same loop into Newman's two-variable recurrence.

Display conventions are a classic source of swapped fractions, so they are
pinned here once:

- eisenstein-stern: (x y) = (1 1) x D is shown as y/x;
- stern-brocot:     (x y)^T = D x (1 1)^T is shown as x/y;
- newman:           state (m, n) yields n/m, not m/n.

D is a power of R exactly when both displayed rationals are integers, and
that integer names the next level, so level boundaries need no counter:
the state stays one matrix no matter how deep the walk goes.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .matrices import IDENTITY, Mat2

EISENSTEIN_STERN = "eisenstein-stern"
STERN_BROCOT = "stern-brocot"
NEWMAN = "newman"
ORDERS = (EISENSTEIN_STERN, STERN_BROCOT, NEWMAN)

MAX_TREE_DEPTH = 20


@dataclass(frozen=True, slots=True)
class Rational:
    """Positive rational in lowest form.

    Construction does not re-reduce: enumeration outputs are coprime by
    construction and the tests verify exactly that, so normalising here
    would hide the bugs those checks exist to catch.
    """

    num: int
    den: int

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __lt__(self, other: "Rational") -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Rational") -> bool:
        return self.num * other.den <= other.num * self.den

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


def enum_step(d: Mat2) -> Mat2:
    """Successor of D in the level-by-level walk of all L/R products.

    A column-0 sum of 1 means D is a power of R, the last word on its
    level; the successor is then the first word of the next level, a power
    of L.  Otherwise the word is t L R^j for some prefix t, and its
    successor t R L^j is one constant matrix product away, with j read off
    the column sums.
    """
    c0 = d.e00 + d.e10
    if c0 == 1:
        return Mat2(1, 0, d.e01 + d.e11, 1)
    j = (d.e01 + d.e11 - 1) // c0
    k = 2 * j + 1
    return Mat2(d.e00 * k - d.e01, d.e00, d.e10 * k - d.e11, d.e10)


def project_eisenstein_stern(d: Mat2) -> Rational:
    """Column sums (1 1) x D = (x y), displayed y/x."""
    return Rational(d.e01 + d.e11, d.e00 + d.e10)


def project_stern_brocot(d: Mat2) -> Rational:
    """Row sums D x (1 1)^T = (x y)^T, displayed x/y."""
    return Rational(d.e00 + d.e01, d.e10 + d.e11)


def newman_step(state: tuple[int, int]) -> tuple[int, int]:
    """One step of m, n := (2*floor(n/m) + 1)*m - n, m.

    The enumerated rational for a state is n/m; stepping preserves
    coprimality because gcd is invariant under adding multiples of one
    coordinate to the other.
    """
    m, n = state
    return (2 * (n // m) + 1) * m - n, m


def enumerate_rationals(order: str, count: int) -> Iterator[Rational]:
    """Lazily yield the first ``count`` positive rationals in ``order``.

    Memory stays flat: the whole state is one matrix (Newman: two
    integers); nothing level-sized is ever buffered, although the integers
    themselves grow without bound.
    """
    _require_order(order)
    if count < 0:
        raise ValueError("count must be >= 0")
    if order == NEWMAN:
        state = (1, 1)
        for _ in range(count):
            yield Rational(state[1], state[0])
            state = newman_step(state)
        return
    project = project_stern_brocot if order == STERN_BROCOT else project_eisenstein_stern
    d = IDENTITY
    for _ in range(count):
        yield project(d)
        d = enum_step(d)


def tree_levels(order: str, depth: int) -> list[list[Rational]]:
    """Levels 0..depth of the chosen tree; level k holds exactly 2^k entries.

    Level boundaries come from the integer test alone (a power of R
    projects to an integer), never from a node counter.  The newman order
    produces the same levels as eisenstein-stern, detected through its own
    m = 1 test.
    """
    _require_order(order)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth > MAX_TREE_DEPTH:
        raise ValueError(f"level too large: depth {depth} exceeds {MAX_TREE_DEPTH}")
    levels: list[list[Rational]] = []
    level: list[Rational] = []
    if order == NEWMAN:
        state = (1, 1)
        while len(levels) <= depth:
            m, n = state
            level.append(Rational(n, m))
            if m == 1:
                levels.append(level)
                level = []
            state = newman_step(state)
        return levels
    project = project_stern_brocot if order == STERN_BROCOT else project_eisenstein_stern
    d = IDENTITY
    while len(levels) <= depth:
        level.append(project(d))
        if d.e00 + d.e10 == 1:
            levels.append(level)
            level = []
        d = enum_step(d)
    return levels


def _require_order(order: str) -> None:
    if order not in ORDERS:
        raise ValueError(f"unknown order {order!r}; expected one of {', '.join(ORDERS)}")

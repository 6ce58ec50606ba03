"""Division relation and Euclid's subtractive gcd.

The gcd used throughout this package is the infimum of two naturals in the
divisibility ordering.  Under that reading gcd(0, 0) = 0: every number
divides 0, so 0 is the top of the ordering and the infimum of {0, 0} is 0
itself.  Size-based definitions leave gcd(0, 0) undefined (and lose
idempotence and associativity in the process); callers who need that
convention must special-case the zero pair themselves.

``gcd`` delegates to :func:`math.gcd` for speed.  The difference-based loop
in :func:`gcd_subtractive` is the reference semantics, and the test suite
pins the two to each other exhaustively.  :func:`gcd_oracle` is a
deliberately naive trial-division search so that other modules can test
against an implementation sharing no code with Euclid's algorithm.

Domains: ``divides`` accepts any integers; the gcd functions take naturals
(use :func:`gcd_int` for signed inputs, which normalises by absolute value).
"""

import math
from dataclasses import dataclass

TRACE_CAP_DEFAULT = 1_000_000


def divides(m: int, n: int) -> bool:
    """True iff some integer k satisfies n = k*m.  Everything divides 0."""
    if m == 0:
        return n == 0
    return n % m == 0


def _require_naturals(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ValueError("gcd is defined on naturals; use gcd_int for signed inputs")


def gcd(m: int, n: int) -> int:
    """Greatest common divisor of two naturals, with gcd(0, 0) = 0."""
    _require_naturals(m, n)
    return math.gcd(m, n)


def gcd_int(m: int, n: int) -> int:
    """gcd for signed integers: m and -m have the same divisors."""
    return math.gcd(abs(m), abs(n))


def gcd_subtractive(m: int, n: int) -> int:
    """Reference gcd: repeatedly subtract the smaller from the larger."""
    _require_naturals(m, n)
    if m == 0 or n == 0:
        return m + n
    x, y = m, n
    while x != y:
        if y < x:
            x -= y
        else:
            y -= x
    return x


@dataclass(frozen=True)
class GcdTrace:
    """Every state visited by the subtractive loop.

    The first step is the input pair, the last is (g, g).  Between any two
    consecutive steps exactly one coordinate drops by the other's value,
    the common-divisor set never changes, and x + y strictly decreases.
    """

    steps: tuple[tuple[int, int], ...]
    result: int


def gcd_traced(m: int, n: int, max_sum: int = TRACE_CAP_DEFAULT) -> GcdTrace:
    """Run the subtractive loop recording each state.

    The loop's guards need strictly positive inputs.  m + n bounds the
    iteration count and therefore the recorded list, so pairs whose sum
    exceeds ``max_sum`` are refused outright rather than truncated.
    """
    if m <= 0 or n <= 0:
        raise ValueError("subtractive loop requires positive inputs")
    if m + n > max_sum:
        raise ValueError(
            f"trace of ({m}, {n}) could need up to {m + n} steps, over the {max_sum} cap"
        )
    x, y = m, n
    steps = [(x, y)]
    while x != y:
        if y < x:
            x -= y
        else:
            y -= x
        steps.append((x, y))
    return GcdTrace(steps=tuple(steps), result=x)


def gcd_oracle(m: int, n: int) -> int:
    """Trial-division gcd, kept naive on purpose: an independent test oracle.

    Scans downward from min(m, n) for the largest common divisor.  Shares
    nothing with Euclid's algorithm, which is the point.
    """
    _require_naturals(m, n)
    if m == 0 or n == 0:
        return m + n
    small = m if m < n else n
    for d in range(small, 0, -1):
        if m % d == 0 and n % d == 0:
            return d
    raise AssertionError("unreachable: 1 divides everything")

"""When does a natural-valued function distribute over gcd?

A function f with f(0) = 0 distributes over gcd whenever, for every
positive x and y, some integers a and b satisfy

    f(x + y) = a*f(x) + b*f(y)     with a coprime to f(y).

Fibonacci qualifies via fib(x+y) = fib(y-1)*fib(x) + fib(x+1)*fib(y), and
the generalised Mersenne map m -> k^m - 1 via
k^(x+y) - 1 = 1*(k^x - 1) + k^x*(k^y - 1).  Whether the condition is also
necessary is open; no distributing function violating it is known.

:func:`check_lemma_condition` verifies a caller-supplied witness for
(a, b) rather than searching: the search space is unbounded, and every
function of interest comes with an explicit witness anyway.
"""

from dataclasses import dataclass
from typing import Callable

from .core import divides, gcd, gcd_int
from .identities import IdentityReport, _require_bound


@dataclass(frozen=True)
class NatFunction:
    """A named total map from naturals to naturals."""

    name: str
    fn: Callable[[int], int]

    def __call__(self, k: int) -> int:
        return self.fn(k)


def fib(k: int) -> int:
    """Fibonacci by iteration: fib(0) = 0, fib(1) = 1, arbitrary precision."""
    if k < 0:
        raise ValueError("fib is defined on naturals")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def mersenne_gen(k: int, m: int) -> int:
    """k^m - 1; k >= 1 keeps the value a natural (and k^0 - 1 = 0)."""
    if k < 1:
        raise ValueError("mersenne_gen requires k >= 1")
    return k**m - 1


FIBONACCI = NatFunction("fib", fib)


def mersenne(k: int) -> NatFunction:
    return NatFunction(f"mersenne-{k}", lambda m: mersenne_gen(k, m))


def times(c: int) -> NatFunction:
    return NatFunction(f"times-{c}", lambda m: c * m)


def distributes_over_gcd(f, bound: int) -> IdentityReport:
    """Exhaustively check f(gcd(m, n)) = gcd(f(m), f(n)) for m, n <= bound."""
    _require_bound(bound)
    name = getattr(f, "name", getattr(f, "__name__", "f"))
    report = IdentityReport(f"{name}-distributes", bound)
    values = [f(k) for k in range(bound + 1)]
    for m in range(bound + 1):
        for n in range(bound + 1):
            report.record((m, n), values[gcd(m, n)] == gcd(values[m], values[n]))
    return report


def fib_multiple_property(n: int, k: int) -> bool:
    """Does fib(k) divide fib(n*k)?  Always true; k must be positive."""
    if k < 1:
        raise ValueError("k must be positive")
    return divides(fib(k), fib(n * k))


def check_lemma_condition(f, witness, bound: int) -> IdentityReport:
    """Verify a distributivity witness on 1 <= x, y <= bound.

    For each (x, y) the witness supplies coefficients (a, b); the report
    records whether f(x+y) = a*f(x) + b*f(y) and |a| is coprime to f(y).
    Witness coefficients may be negative, and sign does not change the
    divisor set, so the coprimality test runs on |a|.
    """
    _require_bound(bound)
    name = getattr(f, "name", getattr(f, "__name__", "f"))
    report = IdentityReport(f"{name}-lemma-condition", bound)
    for x in range(1, bound + 1):
        fx = f(x)
        for y in range(1, bound + 1):
            a, b = witness(x, y)
            holds = f(x + y) == a * fx + b * f(y) and gcd_int(a, f(y)) == 1
            report.record((x, y), holds)
    return report


def fib_witness(x: int, y: int) -> tuple[int, int]:
    """Coefficients from the Fibonacci addition formula."""
    return fib(y - 1), fib(x + 1)


def mersenne_witness(k: int) -> Callable[[int, int], tuple[int, int]]:
    """Coefficients (1, k^x); 1 is coprime to everything."""

    def witness(x: int, y: int) -> tuple[int, int]:
        return 1, k**x

    return witness


def linear_witness(x: int, y: int) -> tuple[int, int]:
    """Witness for any f that distributes over addition."""
    return 1, 1

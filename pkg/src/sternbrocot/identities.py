"""The gcd identity catalogue as executable, exhaustively checked reports.

Each check sweeps a small rectangle of inputs and returns an
:class:`IdentityReport`; an empty counterexample list means the identity
held on every tuple in range.  Exhaustive sweeps beat random sampling here
because the interesting bounds are tiny and the guarantee is stronger.
"""

from dataclasses import dataclass, field

from .core import divides, gcd

MAX_RECORDED = 16


@dataclass
class IdentityReport:
    """Outcome of checking one identity over a bounded range."""

    name: str
    bound: int
    cases: int = 0
    failures: int = 0
    counterexamples: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, case: tuple, holds: bool) -> None:
        self.cases += 1
        if not holds:
            self.failures += 1
            if len(self.counterexamples) < MAX_RECORDED:
                self.counterexamples.append(case)

    def summary(self) -> str:
        if self.ok:
            return f"{self.name}: bound={self.bound} cases={self.cases} ok"
        return (
            f"{self.name}: bound={self.bound} cases={self.cases} "
            f"FAIL failures={self.failures} first={self.counterexamples[0]}"
        )


def check_gcd_mult(bound: int) -> IdentityReport:
    """k divides both c*m and c*n exactly when k divides c*gcd(m, n).

    Checked for all 0 <= m, n <= bound and 1 <= k, c <= bound; cases are
    recorded as (k, c, m, n).
    """
    _require_bound(bound)
    report = IdentityReport("gcd-mult", bound)
    for k in range(1, bound + 1):
        for c in range(1, bound + 1):
            for m in range(bound + 1):
                cm_divisible = divides(k, c * m)
                for n in range(bound + 1):
                    lhs = cm_divisible and divides(k, c * n)
                    rhs = divides(k, c * gcd(m, n))
                    report.record((k, c, m, n), lhs == rhs)
    return report


def check_euclids_lemma(bound: int) -> IdentityReport:
    """When gcd(m, n) = 1, m divides c*n exactly when m divides c.

    Tuples with gcd(m, n) != 1 satisfy the implication vacuously but still
    count as checked cases (m, n, c).
    """
    _require_bound(bound)
    report = IdentityReport("euclids-lemma", bound)
    for m in range(bound + 1):
        for n in range(bound + 1):
            coprime = gcd(m, n) == 1
            for c in range(1, bound + 1):
                holds = not coprime or divides(m, c * n) == divides(m, c)
                report.record((m, n, c), holds)
    return report


def check_scaling(bound: int) -> IdentityReport:
    """Multiplication by a natural distributes over gcd: (cm, cn) -> c*gcd."""
    _require_bound(bound)
    report = IdentityReport("scaling", bound)
    for c in range(bound + 1):
        for m in range(bound + 1):
            for n in range(bound + 1):
                report.record((c, m, n), gcd(c * m, c * n) == c * gcd(m, n))
    return report


def check_coprime_absorb(bound: int) -> IdentityReport:
    """A factor p coprime to n is invisible: gcd(m*p, n) = gcd(m, n)."""
    _require_bound(bound)
    report = IdentityReport("coprime-absorb", bound)
    for m in range(bound + 1):
        for p in range(bound + 1):
            for n in range(bound + 1):
                holds = gcd(p, n) != 1 or gcd(m * p, n) == gcd(m, n)
                report.record((m, p, n), holds)
    return report


def lattice_point_count(m: int, n: int) -> int:
    """Integer points on the closed segment (0,0)-(m,n), excluding the origin.

    Counted directly from the definition: for positive m and n a point
    exists for each 0 < t <= n with m*t = n*s solvable in integers.  This
    is the brute-force side of the theorem that the count equals gcd(m, n);
    it must stay enumeration-based, never a gcd in disguise.
    """
    if m < 0 or n < 0:
        raise ValueError("segment endpoints are naturals")
    if m == 0 or n == 0:
        # Degenerate segments lie on an axis: (1,0)..(m,0) or (0,1)..(0,n).
        return m + n
    return sum(1 for t in range(1, n + 1) if (m * t) % n == 0)


def check_lattice_gcd(bound: int) -> IdentityReport:
    """Lattice-point count against gcd over the full (bound+1)^2 square."""
    _require_bound(bound)
    report = IdentityReport("lattice-count", bound)
    for m in range(bound + 1):
        for n in range(bound + 1):
            report.record((m, n), lattice_point_count(m, n) == gcd(m, n))
    return report


def _require_bound(bound: int) -> None:
    if bound < 1:
        raise ValueError("bound must be >= 1")

"""2x2 integer matrices and the matrix form of Euclid's algorithm.

The subtractive loop's two assignments are right-multiplications of the row
vector (x y) by L_INV = (1 0 / -1 1) and R_INV = (1 -1 / 0 1).  Their
inverses L = (1 0 / 1 1) and R = (1 1 / 0 1) have determinant 1 and
non-negative entries, and so does every finite product of them; those
products form a binary search tree under the order compared by
:func:`lr_order_lt`, which is why no two L/R words share a matrix.

:func:`euclid_matrix` runs the loop while maintaining
(m n) = (x y) x D with D a product of L and R, so on termination
(m n) = (g g) x D and (1 1) x D = (m/g n/g).  Since det D = 1, its inverse
is the adjugate, which is all :func:`bezout` needs to produce coefficients
with m*a + n*b = gcd(m, n).
"""

from dataclasses import dataclass

from .core import gcd


@dataclass(frozen=True, slots=True)
class Mat2:
    """Row-major 2x2 integer matrix; e01 is row 0, column 1."""

    e00: int
    e01: int
    e10: int
    e11: int

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.e00 * other.e00 + self.e01 * other.e10,
            self.e00 * other.e01 + self.e01 * other.e11,
            self.e10 * other.e00 + self.e11 * other.e10,
            self.e10 * other.e01 + self.e11 * other.e11,
        )

    def det(self) -> int:
        return self.e00 * self.e11 - self.e01 * self.e10

    def transpose(self) -> "Mat2":
        return Mat2(self.e00, self.e10, self.e01, self.e11)

    def inverse_unimodular(self) -> "Mat2":
        """Exact inverse via the adjugate; only valid when det = 1."""
        if self.det() != 1:
            raise ValueError("inverse_unimodular requires determinant 1")
        return Mat2(self.e11, -self.e01, -self.e10, self.e00)


IDENTITY = Mat2(1, 0, 0, 1)
L = Mat2(1, 0, 1, 1)
R = Mat2(1, 1, 0, 1)
L_INV = Mat2(1, 0, -1, 1)  # (x y) * L_INV == (x - y, y)
R_INV = Mat2(1, -1, 0, 1)  # (x y) * R_INV == (x, y - x)


def mat_mul(p: Mat2, q: Mat2) -> Mat2:
    """Standard 2x2 product in exact integer arithmetic."""
    return p * q


def row_times_mat(v: tuple[int, int], m: Mat2) -> tuple[int, int]:
    """Row vector times matrix: (v0 v1) x M."""
    return v[0] * m.e00 + v[1] * m.e10, v[0] * m.e01 + v[1] * m.e11


def mat_times_col(m: Mat2, v: tuple[int, int]) -> tuple[int, int]:
    """Matrix times column vector: M x (v0 v1)^T."""
    return m.e00 * v[0] + m.e01 * v[1], m.e10 * v[0] + m.e11 * v[1]


class LRWord:
    """A word over {L, R} together with the product of its letters.

    The word itself is carried only for diagnostics; equality and hashing
    look at the matrix alone, which is what the order relation and the
    search-tree property are about.
    """

    __slots__ = ("word", "matrix")

    def __init__(self, word: str):
        letters = set(word)
        if letters - {"L", "R"}:
            raise ValueError(f"word may contain only L and R: {word!r}")
        m = IDENTITY
        for letter in word:
            m = m * (L if letter == "L" else R)
        self.word = word
        self.matrix = m

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LRWord):
            return self.matrix == other.matrix
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"LRWord({self.word!r})"


def lr_order_lt(x: "LRWord | Mat2", y: "LRWord | Mat2") -> bool:
    """Strict order on L/R products, compared without division.

    (a c / b d) comes before (a' c' / b' d') when (a+c)/(b+d) is less than
    (a'+c')/(b'+d').  Row sums of such products are strictly positive, so
    cross-multiplying preserves the comparison.
    """
    p = x.matrix if isinstance(x, LRWord) else x
    q = y.matrix if isinstance(y, LRWord) else y
    return (p.e00 + p.e01) * (q.e10 + q.e11) < (q.e00 + q.e01) * (p.e10 + p.e11)


def euclid_matrix(m: int, n: int) -> tuple[int, Mat2]:
    """Subtractive Euclid maintaining (m n) = (x y) x D.

    Returns (g, D) where g = gcd(m, n), D is a product of L and R,
    (m n) = (g g) x D, and (1 1) x D = (m/g n/g).
    """
    if m <= 0 or n <= 0:
        raise ValueError("matrix Euclid requires positive inputs")
    x, y = m, n
    d = IDENTITY
    while x != y:
        if y < x:
            x -= y
            d = L * d
        else:
            y -= x
            d = R * d
    return x, d


def euclid_matrix_col(m: int, n: int) -> tuple[int, Mat2]:
    """Column-vector twin of :func:`euclid_matrix`.

    Updates (x y)^T by left-multiplication and accumulates the same
    factors into C, so that C x (m n)^T = (g g)^T on termination.  C is
    the inverse transpose of the row variant's D, hence
    C^-1 x (1 1)^T = (m/g n/g)^T.
    """
    if m <= 0 or n <= 0:
        raise ValueError("matrix Euclid requires positive inputs")
    x, y = m, n
    c = IDENTITY
    while x != y:
        if y < x:
            x -= y
            c = R_INV * c
        else:
            y -= x
            c = L_INV * c
    return x, c


@dataclass(frozen=True)
class BezoutCertificate:
    """Integers (a, b) with m*a + n*b = g for the pair they were issued for."""

    a: int
    b: int
    g: int

    def holds_for(self, m: int, n: int) -> bool:
        return m * self.a + n * self.b == self.g


def bezout(m: int, n: int) -> BezoutCertificate:
    """A linear combination m*a + n*b = gcd(m, n), extracted from D^-1.

    D has determinant 1, so the inverse is the adjugate and the
    coefficients stay exact.  When one argument is 0 the combination
    m*1 + 0*1 = m needs no loop; the all-zero pair has nothing to combine
    and is refused.
    """
    if m < 0 or n < 0:
        raise ValueError("bezout is defined on naturals")
    if m == 0 and n == 0:
        raise ValueError("no linear combination needed; gcd is 0")
    if n == 0:
        return BezoutCertificate(1, 1, m)
    if m == 0:
        return BezoutCertificate(1, 1, n)
    g, d = euclid_matrix(m, n)
    c = d.inverse_unimodular()
    cert = BezoutCertificate(c.e00, c.e10, g)
    assert cert.g == gcd(m, n)
    return cert

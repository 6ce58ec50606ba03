"""Matrix algebra, matrix-form Euclid, Bezout certificates, and the L/R order."""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sternbrocot import (
    IDENTITY,
    L,
    L_INV,
    R,
    R_INV,
    LRWord,
    Mat2,
    bezout,
    euclid_matrix,
    euclid_matrix_col,
    gcd,
    lr_order_lt,
    mat_mul,
    mat_times_col,
    row_times_mat,
)

words = st.text(alphabet="LR", max_size=12)


class TestMat2:
    def test_product_of_generators(self):
        assert mat_mul(L, R) == Mat2(1, 1, 1, 2)

    def test_identity_is_neutral(self):
        x = Mat2(3, 5, 7, 11)
        assert IDENTITY * x == x
        assert x * IDENTITY == x

    def test_inverse_pairs(self):
        assert L_INV * L == IDENTITY
        assert L * L_INV == IDENTITY
        assert R_INV * R == IDENTITY

    def test_vector_shapes(self):
        # (x y) * L_INV is the subtractive step x := x - y.
        assert row_times_mat((7, 3), L_INV) == (4, 3)
        assert row_times_mat((7, 3), R_INV) == (7, -4)
        assert mat_times_col(R_INV, (7, 3)) == (4, 3)

    def test_inverse_unimodular(self):
        d = L * R * R * L
        assert d.det() == 1
        assert d * d.inverse_unimodular() == IDENTITY
        with pytest.raises(ValueError, match="determinant"):
            Mat2(2, 0, 0, 1).inverse_unimodular()

    def test_transpose(self):
        assert L.transpose() == R
        assert Mat2(1, 2, 3, 4).transpose() == Mat2(1, 3, 2, 4)

    @given(words)
    def test_lr_products_are_unimodular_with_positive_column_sums(self, word):
        m = LRWord(word).matrix
        assert m.det() == 1
        assert min(m.e00, m.e01, m.e10, m.e11) >= 0
        assert m.e00 + m.e10 >= 1
        assert m.e01 + m.e11 >= 1


class TestLRWord:
    def test_matrix_is_word_product(self):
        assert LRWord("LR").matrix == L * R
        assert LRWord("").matrix == IDENTITY

    def test_equality_is_on_matrices(self):
        assert LRWord("LR") != LRWord("RL")
        assert LRWord("L") == LRWord("L")

    def test_rejects_other_letters(self):
        with pytest.raises(ValueError):
            LRWord("LxR")

    def test_all_short_words_are_distinct(self):
        matrices = set()
        count = 0
        for length in range(11):
            for letters in product("LR", repeat=length):
                matrices.add(LRWord("".join(letters)).matrix)
                count += 1
        assert len(matrices) == count == 2**11 - 1


class TestLROrder:
    def test_examples(self):
        assert lr_order_lt(LRWord("L"), LRWord(""))
        assert not lr_order_lt(LRWord("RL"), LRWord("RL"))
        assert lr_order_lt(LRWord(""), LRWord("R"))

    @given(words, words, words)
    def test_binary_search_property(self, x, y, z):
        left = LRWord(x + "L" + y)
        right = LRWord(x + "R" + z)
        root = LRWord(x)
        assert lr_order_lt(left, root)
        assert lr_order_lt(root, right)


class TestEuclidMatrix:
    def test_hand_traced_example(self):
        g, d = euclid_matrix(2, 3)
        assert g == 1
        assert d == L * R == Mat2(1, 1, 1, 2)

    def test_equal_inputs(self):
        g, d = euclid_matrix(7, 7)
        assert (g, d) == (7, IDENTITY)

    def test_coprime_pair_recovers_inputs(self):
        g, d = euclid_matrix(3, 5)
        assert g == 1
        assert row_times_mat((1, 1), d) == (3, 5)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            euclid_matrix(0, 5)

    def test_postconditions_exhaustively(self):
        for m in range(1, 257):
            for n in range(1, 257):
                g, d = euclid_matrix(m, n)
                assert g == gcd(m, n)
                assert row_times_mat((g, g), d) == (m, n)
                assert row_times_mat((1, 1), d) == (m // g, n // g)
                assert d.det() == 1 and min(d.e00, d.e01, d.e10, d.e11) >= 0

    def test_transpose_duality(self):
        # The column variant accumulates the transposed inverse factors, so
        # its C satisfies C^-1 = D^T and recovers the reduced pair as a column.
        for m in range(1, 65):
            for n in range(1, 65):
                g, d = euclid_matrix(m, n)
                g2, c = euclid_matrix_col(m, n)
                assert g2 == g
                assert c == d.transpose().inverse_unimodular()
                assert mat_times_col(c.inverse_unimodular(), (1, 1)) == (m // g, n // g)
                assert mat_times_col(c, (m, n)) == (g, g)


class TestBezout:
    def test_small_coprime_example(self):
        cert = bezout(3, 5)
        assert cert.g == 1
        assert 3 * cert.a + 5 * cert.b == 1
        assert (cert.a, cert.b) == (2, -1)

    def test_zero_edges(self):
        cert = bezout(9, 0)
        assert (cert.a, cert.b, cert.g) == (1, 1, 9)
        cert = bezout(0, 9)
        assert (cert.a, cert.b, cert.g) == (1, 1, 9)

    def test_non_coprime_pair(self):
        cert = bezout(4, 6)
        assert cert.g == 2
        assert cert.holds_for(4, 6)

    def test_both_zero_is_refused(self):
        with pytest.raises(ValueError, match="no linear combination"):
            bezout(0, 0)

    @given(st.integers(1, 400), st.integers(1, 400))
    def test_certificate_identity(self, m, n):
        cert = bezout(m, n)
        assert cert.g == gcd(m, n)
        assert m * cert.a + n * cert.b == cert.g

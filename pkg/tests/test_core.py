"""Division relation, subtractive gcd, traces, and the trial-division oracle."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sternbrocot import (
    divides,
    gcd,
    gcd_int,
    gcd_oracle,
    gcd_subtractive,
    gcd_traced,
)

naturals = st.integers(min_value=0, max_value=300)
positives = st.integers(min_value=1, max_value=300)


class TestDivides:
    def test_examples(self):
        assert divides(3, 12)
        assert divides(5, 0)
        assert not divides(0, 7)
        assert divides(0, 0)

    def test_signed_arguments(self):
        assert divides(-3, 12)
        assert divides(3, -12)
        assert not divides(-5, 12)

    @given(
        st.integers(-200, 200),
        st.integers(-200, 200),
        st.integers(-200, 200),
        st.integers(-10, 10),
    )
    def test_preserved_by_linear_combination(self, k, x, y, a):
        lhs = divides(k, x) and divides(k, y)
        rhs = divides(k, x + a * y) and divides(k, y)
        assert lhs == rhs


class TestGcd:
    def test_examples(self):
        assert gcd(3, 5) == 1
        assert gcd(12, 18) == 6
        assert gcd(0, 0) == 0

    @given(naturals)
    def test_self_and_zero(self, m):
        assert gcd(m, m) == m
        assert gcd(m, 0) == m
        assert gcd(0, m) == m

    def test_matches_oracle_exhaustively(self):
        for m in range(65):
            for n in range(65):
                assert gcd(m, n) == gcd_oracle(m, n)

    def test_matches_subtractive_reference_full_range(self):
        # The fast mod-based path is only admissible because this sweep
        # pins it to the subtractive loop over the whole tested range.
        for m in range(513):
            for n in range(513):
                assert gcd(m, n) == gcd_subtractive(m, n)

    @given(naturals, naturals)
    def test_symmetry(self, m, n):
        assert gcd(m, n) == gcd(n, m)

    @given(naturals, naturals, naturals)
    def test_associativity(self, m, n, p):
        assert gcd(gcd(m, n), p) == gcd(m, gcd(n, p))

    @given(naturals, naturals, st.integers(0, 12))
    def test_invariant_under_adding_multiples(self, m, n, a):
        assert gcd(m + a * n, n) == gcd(m, n)

    def test_rejects_negatives(self):
        with pytest.raises(ValueError):
            gcd(-4, 6)

    @given(st.integers(-200, 200), st.integers(-200, 200))
    def test_gcd_int_normalises_sign(self, m, n):
        assert gcd_int(m, n) == gcd(abs(m), abs(n))


class TestGcdTraced:
    def test_hand_executed_example(self):
        trace = gcd_traced(2, 3)
        assert trace.steps == ((2, 3), (2, 1), (1, 1))
        assert trace.result == 1

    def test_equal_inputs_never_fire_the_guards(self):
        trace = gcd_traced(4, 4)
        assert trace.steps == ((4, 4),)
        assert trace.result == 4

    def test_six_four(self):
        trace = gcd_traced(6, 4)
        assert trace.result == 2
        sums = [x + y for x, y in trace.steps]
        assert all(a > b for a, b in zip(sums, sums[1:]))

    @given(positives, positives)
    def test_structural_invariants(self, m, n):
        trace = gcd_traced(m, n)
        assert trace.steps[0] == (m, n)
        assert trace.steps[-1] == (trace.result, trace.result)
        # Exactly one coordinate decreases, by the other's previous value.
        for (px, py), (x, y) in zip(trace.steps, trace.steps[1:]):
            assert (x, y) == (px - py, py) or (x, y) == (px, py - px)
        # The common-divisor set is unchanged along the whole trace.
        expected = gcd_oracle(m, n)
        for x, y in trace.steps:
            assert gcd_oracle(x, y) == expected
        # x + y is a strictly decreasing bound on remaining work.
        sums = [x + y for x, y in trace.steps]
        assert all(a > b for a, b in zip(sums, sums[1:]))

    def test_rejects_zero_inputs(self):
        with pytest.raises(ValueError, match="positive"):
            gcd_traced(0, 3)
        with pytest.raises(ValueError, match="positive"):
            gcd_traced(3, 0)

    def test_refuses_oversized_traces(self):
        with pytest.raises(ValueError, match="cap"):
            gcd_traced(1, 10**7)
        # Plain gcd has no such cap.
        assert gcd(1, 10**7) == 1
        # The cap is adjustable.
        assert gcd_traced(1, 10**3, max_sum=10**4).result == 1


class TestGcdOracle:
    def test_examples(self):
        assert gcd_oracle(12, 18) == 6
        assert gcd_oracle(1, 999) == 1
        assert gcd_oracle(0, 9) == 9
        assert gcd_oracle(0, 0) == 0

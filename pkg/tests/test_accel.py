import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from recurseq import (
    DegenerateRatio,
    IndexCapExceeded,
    IndexSequenceParams,
    LinRecSequence,
    RecurrenceParams,
    accelerate_general,
    arithmetic_index_accel,
    basis_ut,
    double_ratio,
    fibonacci_index_accel,
    general_ratio_y,
    ratio_x,
    shift_ratio,
    verify_cubic_fibonacci_identity,
    verify_fkn_identity,
    verify_nested_fibonacci_identity,
)
from oracles import frac_to_decimal, larger_root, naive_sequence

FIB = RecurrenceParams(1, -1)
MERS = RecurrenceParams(3, 2)

params_st = st.builds(RecurrenceParams, st.integers(-10, 10), st.integers(-10, 10))


class TestRatio:
    def test_examples(self):
        assert ratio_x(FIB, 4) == Fraction(3, 2)
        assert ratio_x(MERS, 5) == Fraction(31, 15)

    @given(p=st.integers(-10, 10).filter(lambda p: p != 0), q=st.integers(-10, 10))
    def test_first_ratio_is_p(self, p, q):
        assert ratio_x(RecurrenceParams(p, q), 2) == p

    def test_degenerate_when_u_vanishes(self):
        # p = 0 gives U_2 = 0, so x_3 divides by zero.
        with pytest.raises(DegenerateRatio):
            ratio_x(RecurrenceParams(0, 5), 3)

    def test_index_below_two_rejected(self):
        with pytest.raises(ValueError):
            ratio_x(FIB, 1)

    @given(params=params_st, n=st.integers(2, 80))
    def test_recovers_u(self, params, n):
        try:
            x = ratio_x(params, n)
        except DegenerateRatio:
            assume(False)
        u_prev = basis_ut(params, n - 1)[0]
        assert x * u_prev == basis_ut(params, n)[0]

    @given(params=params_st, n=st.integers(2, 80))
    def test_equals_minus_q_u_over_t(self, params, n):
        assume(params.q != 0)
        u_n, t_n = basis_ut(params, n)
        assume(t_n != 0)
        try:
            x = ratio_x(params, n)
        except DegenerateRatio:
            assume(False)
        assert x == Fraction(-params.q * u_n, t_n)


class TestGeneralRatio:
    def test_examples(self):
        assert general_ratio_y(LinRecSequence(2, 1, FIB), 4) == Fraction(7, 4)
        assert general_ratio_y(LinRecSequence(0, 1, MERS), 6) == ratio_x(MERS, 6)
        # Oracle: 1, 3, 7, 15 under a_n = 3a_{n-1} - 2a_{n-2}, so a_3/a_2 = 15/7.
        assert general_ratio_y(LinRecSequence(1, 3, MERS), 3) == Fraction(15, 7)

    @given(
        params=params_st,
        a0=st.integers(-20, 20),
        a1=st.integers(-20, 20),
        n=st.integers(2, 60),
    )
    def test_matches_term_ratio(self, params, a0, a1, n):
        seq = naive_sequence(a0, a1, params.p, params.q, n)
        try:
            y = general_ratio_y(LinRecSequence(a0, a1, params), n)
        except DegenerateRatio:
            # Flagged, never mis-valued: only legal when a denominator is 0.
            u_prev = basis_ut(params, n - 1)[0]
            assert u_prev == 0 or seq[n - 1] == 0
            return
        assert seq[n - 1] != 0 and y == Fraction(seq[n], seq[n - 1])


class TestShiftAndDouble:
    def test_shift_examples(self):
        assert shift_ratio(FIB, Fraction(1), Fraction(2)) == Fraction(3, 2)
        assert shift_ratio(MERS, Fraction(3), Fraction(7, 3)) == Fraction(15, 7)
        assert shift_ratio(FIB, Fraction(2), Fraction(2)) == Fraction(5, 3)

    def test_double_examples(self):
        assert double_ratio(FIB, Fraction(1)) == Fraction(3, 2)
        assert double_ratio(FIB, Fraction(3, 2)) == Fraction(21, 13)
        assert double_ratio(MERS, Fraction(3)) == Fraction(15, 7)

    def test_double_flags_degenerate(self):
        # q = x^2 exactly: (p, q) = (2, 4) has x_2 = 2.
        with pytest.raises(DegenerateRatio):
            double_ratio(RecurrenceParams(2, 4), Fraction(2))

    @given(params=params_st, n=st.integers(2, 40), m=st.integers(1, 39))
    def test_shift_matches_direct(self, params, n, m):
        try:
            x_n = ratio_x(params, n)
            x_m1 = ratio_x(params, m + 1)
            shifted = shift_ratio(params, x_n, x_m1)
        except DegenerateRatio:
            assume(False)
        assert shifted == ratio_x(params, n + m)

    @given(params=params_st, n=st.integers(2, 40))
    def test_double_matches_direct(self, params, n):
        try:
            doubled = double_ratio(params, ratio_x(params, n))
        except DegenerateRatio:
            assume(False)
        assert doubled == ratio_x(params, 2 * n)


class TestAccelerateGeneral:
    def test_fibonacci_index_chain(self):
        entries = accelerate_general(FIB, IndexSequenceParams(2, 3, 1, -1), 3)
        assert [(e.index, e.x) for e in entries] == [
            (2, Fraction(1)),
            (3, Fraction(2)),
            (5, Fraction(5, 3)),
        ]

    def test_constant_chain(self):
        entries = accelerate_general(FIB, IndexSequenceParams(2, 2, 1, 0), 4)
        assert [(e.index, e.x) for e in entries] == [(2, 1), (2, 1), (2, 1), (2, 1)]

    def test_mixed_chain_reaches_x8(self):
        entries = accelerate_general(FIB, IndexSequenceParams(2, 3, 2, -1), 3)
        assert entries[-1].index == 8
        assert entries[-1].x == Fraction(21, 13)

    def test_random_chains_match_ratio_oracle(self):
        rng = random.Random(97531)
        produced = 0
        while produced < 60:
            p, q = rng.randint(-9, 9), rng.randint(-9, 9)
            if q == 0:
                continue
            g = IndexSequenceParams(rng.randint(2, 5), rng.randint(2, 6), rng.randint(1, 3), rng.randint(-3, 1))
            params = RecurrenceParams(p, q)
            try:
                entries = accelerate_general(params, g, 4, max_index=10_000)
            except (DegenerateRatio, ValueError, IndexCapExceeded):
                continue
            for e in entries:
                assert e.x == ratio_x(params, e.index)
                u, t = basis_ut(params, e.index)
                assert (e.u, e.t) == (u, t)
            produced += 1

    def test_rejects_small_seed_indices(self):
        with pytest.raises(ValueError):
            accelerate_general(FIB, IndexSequenceParams(1, 3, 1, -1), 3)

    def test_rejects_q_zero(self):
        from recurseq import InverseUnavailable

        with pytest.raises(InverseUnavailable):
            accelerate_general(RecurrenceParams(3, 0), IndexSequenceParams(2, 3, 1, -1), 3)


class TestFibonacciIndexStep:
    def test_examples(self):
        assert fibonacci_index_accel(FIB, Fraction(2), Fraction(1)) == Fraction(5, 3)
        assert fibonacci_index_accel(FIB, Fraction(5, 3), Fraction(2)) == Fraction(21, 13)
        assert fibonacci_index_accel(MERS, Fraction(7, 3), Fraction(3)) == Fraction(31, 15)


class TestArithmeticIndex:
    def test_examples(self):
        entries = arithmetic_index_accel(FIB, 2, 2, 3)
        assert [(e.index, e.x) for e in entries] == [(2, 1), (4, Fraction(3, 2)), (6, Fraction(8, 5))]
        constant = arithmetic_index_accel(FIB, 2, 0, 5)
        assert all(e.index == 2 and e.x == 1 for e in constant)
        assert arithmetic_index_accel(MERS, 2, 1, 3)[-1].x == Fraction(15, 7)

    def test_columns_match_basis(self):
        rng = random.Random(24680)
        produced = 0
        while produced < 40:
            p, q = rng.randint(-9, 9), rng.randint(-9, 9)
            if q == 0:
                continue
            params = RecurrenceParams(p, q)
            h, k = rng.randint(2, 12), rng.randint(0, 8)
            try:
                entries = arithmetic_index_accel(params, h, k, 5)
            except DegenerateRatio:
                continue
            for e in entries:
                u, t = basis_ut(params, e.index)
                assert (e.u, e.t) == (u, t)
                assert e.x == ratio_x(params, e.index)
            produced += 1


class TestFibonacciIdentities:
    @pytest.mark.parametrize("n", range(3, 21))
    def test_nested_identity(self, n):
        assert verify_nested_fibonacci_identity(n)

    def test_nested_identity_hits_cap(self):
        # F_40 = 102334155 sits beyond the default cap of 10^7.
        with pytest.raises(IndexCapExceeded):
            verify_nested_fibonacci_identity(40)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_fkn_identity(self, k):
        assert all(verify_fkn_identity(k, n) for n in range(2, 16))

    def test_cubic_identity(self):
        assert all(verify_cubic_fibonacci_identity(n) for n in range(3, 51))


class TestRatioConvergence:
    def test_error_eventually_strictly_decreasing(self):
        rng = random.Random(777)
        seen = 0
        while seen < 20:
            p, q = rng.randint(-10, 10), rng.randint(-10, 10)
            if p == 0 or q == 0 or p * p - 4 * q <= 0:
                continue
            alpha = larger_root(p, q, prec=150)
            params = RecurrenceParams(p, q)
            errors = [abs(frac_to_decimal(ratio_x(params, n), prec=150) - alpha) for n in range(2, 41)]
            tail = errors[-20:]
            assert all(tail[i + 1] < tail[i] for i in range(len(tail) - 1)), (p, q)
            seen += 1

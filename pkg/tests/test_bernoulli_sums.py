"""Weighted Bernoulli sum identities.

Every identity is checked against `bernoulli_lhs`, a brute-force sum over
integer compositions that never touches the table machinery.
"""

from fractions import Fraction

import pytest

from evenzeta import (
    UniPoly,
    a_coeffs,
    bernoulli_identity,
    bernoulli_lhs,
    big_F,
    f_prod,
    truncation_depth,
    verify_bernoulli,
)

T = UniPoly.x()
HALF = Fraction(1, 2)


class TestTruncationDepth:
    def test_values(self):
        assert truncation_depth((0,)) == 0
        assert truncation_depth((1, 0)) == 0
        assert truncation_depth((0, 0, 0, 0)) == 1
        assert truncation_depth((2, 0, 0, 0)) == 2
        assert truncation_depth((3, 0, 0, 0)) == 2

    def test_formula(self):
        # max(floor((s + n - 2)/2), floor((n - 1)/2)) over the grid.
        for mvec, s, n in [((1,), 1, 1), ((2, 1), 3, 2), ((0, 0, 0), 0, 3)]:
            expected = max((s + n - 2) // 2, (n - 1) // 2)
            assert truncation_depth(mvec) == expected

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            truncation_depth(())

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            truncation_depth((1, -1))


class TestFProd:
    def test_single_factor(self):
        assert f_prod((0,)) == (T / 2 - 1, UniPoly.one())
        assert f_prod((1,)) == (T / 2, 1 - T, UniPoly.constant(-1))

    def test_product_of_two(self):
        # Convolution of (t/2 - 1, 1) with itself.
        prod = f_prod((0, 0))
        assert prod[0] == (T / 2 - 1) ** 2
        assert prod[1] == 2 * (T / 2 - 1)
        assert prod[2] == UniPoly.one()

    def test_length(self):
        # One entry per power of h from 0 to sum(m) + n.
        assert len(f_prod((2, 0, 0, 0))) == 7


class TestBigF:
    def test_single_zero(self):
        F = big_F((0,))
        assert F[1] == UniPoly.one()

    def test_single_one(self):
        F = big_F((1,))
        assert F[1].is_zero()
        assert F[2] == UniPoly.one()

    def test_head_closed_form(self):
        # F_0 = (1/2) prod(t/2 - [m_j = 0]) + (1/2)(-1)^n prod(t/2 + [m_j = 0]).
        for mvec in [(0,), (1,), (0, 0), (1, 0), (0, 0, 0, 0), (2, 0, 0, 0)]:
            n = len(mvec)
            low = UniPoly.one()
            high = UniPoly.one()
            for m in mvec:
                delta = 1 if m == 0 else 0
                low = low * (T / 2 - delta)
                high = high * (T / 2 + delta)
            expected = HALF * low + HALF * (-1) ** n * high
            assert big_F(mvec)[0] == expected

    def test_all_entries_even(self):
        for mvec in [(0,), (1,), (2,), (0, 0), (1, 0), (0, 0, 0, 0), (3, 0, 0, 0)]:
            for poly in big_F(mvec):
                if poly.is_zero():
                    continue
                for i in range(1, poly.degree() + 1, 2):
                    assert poly.coefficient(i) == 0


class TestACoeffs:
    def test_single_zero(self):
        table = a_coeffs((0,))
        assert table[(1, 0)] == 1

    def test_single_one(self):
        table = a_coeffs((1,))
        assert table[(2, 0)] == 1
        assert table[(1, 0)] == 0

    def test_rectangle_filled(self):
        # Keys cover 1 <= j <= sum(m) + n, 0 <= 2l <= sum(m) + n - j.
        mvec = (2, 0, 0, 0)
        total = 6
        table = a_coeffs(mvec)
        for j in range(1, total + 1):
            for l in range(0, (total - j) // 2 + 1):
                assert (j, l) in table


class TestBruteForceLhs:
    def test_spot_values(self):
        assert bernoulli_lhs((0,), 3) == Fraction(1, 30240)
        assert bernoulli_lhs((0, 0), 2) == Fraction(1, 144)
        assert bernoulli_lhs((1, 0), 2) == Fraction(1, 144)

    def test_single_term_sum(self):
        # n = 1: the sum has one composition, k itself, weighted k^m.
        from evenzeta import bernoulli, factorial

        for k in range(1, 8):
            assert bernoulli_lhs((0,), k) == bernoulli(2 * k) / factorial(2 * k)
            assert bernoulli_lhs((2,), k) == (
                Fraction(k) ** 2 * bernoulli(2 * k) / factorial(2 * k)
            )

    def test_k_below_n_rejected(self):
        with pytest.raises(ValueError):
            bernoulli_lhs((0, 0), 1)


class TestIdentity:
    def test_printed_displays_n4(self):
        identity = bernoulli_identity((0, 0, 0, 0))
        K = T
        assert identity.T == 1
        assert identity.rhs[0] == -(K + 1) * (2 * K + 1) * (2 * K + 3) / 3
        assert identity.rhs[1] == -2 * K / 3

    def test_rhs_value_matches_polys(self):
        identity = bernoulli_identity((2, 0, 0, 0))
        from evenzeta import bernoulli, factorial

        for k in range(4, 10):
            expected = sum(
                identity.rhs[l](k)
                * bernoulli(2 * k - 2 * l)
                / factorial(2 * k - 2 * l)
                for l in range(min(identity.T, k) + 1)
            )
            assert identity.rhs_value(k) == expected

    def test_rhs_value_domain(self):
        identity = bernoulli_identity((0, 0))
        with pytest.raises(ValueError):
            identity.rhs_value(1)

    def test_degree_bounds(self):
        # deg rhs[l] <= sum(m) + n - 2l - 1.
        for mvec in [(0,), (1, 0), (0, 0, 0), (2, 0, 0, 0), (1, 1, 1)]:
            identity = bernoulli_identity(mvec)
            r = sum(mvec)
            n = len(mvec)
            for l, poly in enumerate(identity.rhs):
                if not poly.is_zero():
                    assert poly.degree() <= r + n - 2 * l - 1


class TestVerification:
    def test_spot_grid(self):
        for mvec in [(0,), (2,), (0, 0), (1, 1), (0, 0, 0), (1, 0, 0)]:
            n = len(mvec)
            for k in range(n, n + 4):
                result = verify_bernoulli(mvec, k)
                assert result.ok, result.describe()

    def test_result_carries_values(self):
        result = verify_bernoulli((0, 0), 3)
        assert result.lhs == result.rhs == str(bernoulli_lhs((0, 0), 3))
        assert bool(result)

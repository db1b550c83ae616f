"""Independent oracles for the special sequences and characters."""

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rfishburn.series import (
    ExactPoly,
    TruncatedSeries,
    rational_binom,
    series_int_pow,
    series_mul,
    series_reciprocal,
)
from rfishburn.special import (
    CArray,
    bernoulli_number,
    bernoulli_poly,
    c_array,
    c_rows,
    chi12,
    f_poly,
    f_poly_by_recursion,
    gen_stirling1,
    glaisher_T,
    is_prime,
    legendre,
    stirling_table,
)


def exp_series(c, order):
    """e^(c t) truncated at t**order, exact over Fraction."""
    return TruncatedSeries(
        tuple(Fraction(c) ** i / factorial(i) for i in range(order + 1)), order
    )


class TestBernoulli:
    def test_frozen_numbers(self):
        expected = [
            Fraction(1),
            Fraction(-1, 2),
            Fraction(1, 6),
            Fraction(0),
            Fraction(-1, 30),
            Fraction(0),
            Fraction(1, 42),
        ]
        assert [bernoulli_number(n) for n in range(7)] == expected

    def test_frozen_polynomial_values(self):
        b2 = bernoulli_poly(2)
        assert b2.evaluate(Fraction(1, 12)) == Fraction(13, 144)
        assert b2.evaluate(Fraction(5, 12)) == Fraction(-11, 144)

    @pytest.mark.parametrize(
        "x", [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 12), Fraction(5, 12)]
    )
    def test_generating_function_oracle(self, x):
        # sum(B_n(x) t^n / n!) = t e^(x t) / (e^t - 1); divide out one t first
        order = 10
        lhs = TruncatedSeries(
            tuple(
                Fraction(bernoulli_poly(n).evaluate(x), factorial(n))
                for n in range(order + 1)
            ),
            order,
        )
        # (e^t - 1)/t, exact unit constant term
        denom = TruncatedSeries(
            tuple(Fraction(1, factorial(i + 1)) for i in range(order + 1)), order
        )
        rhs = series_mul(exp_series(x, order), series_reciprocal(denom))
        assert lhs == rhs

    def test_difference_property(self):
        # B_n(x+1) - B_n(x) = n x^(n-1)
        for n in range(1, 9):
            poly = bernoulli_poly(n)
            diff = poly.taylor_shift(1) - poly
            expected = ExactPoly.from_coeffs([0] * (n - 1) + [n])
            assert diff == expected


class TestGlaisher:
    def test_frozen_anchors(self):
        assert glaisher_T(0) == 1
        assert glaisher_T(1) == 23

    def test_integrality_through_twelve(self):
        for n in range(13):
            assert isinstance(glaisher_T(n), int)

    def test_exponential_identity_oracle(self):
        # e^(t/24) sum((1-e^t)...(1-e^(nt))) = sum(T_n/n! (-t/24)^n).
        # Each factor has t-valuation 1, so summands up to n = order suffice.
        order = 6
        total = TruncatedSeries.constant(1, order)
        poch = TruncatedSeries.constant(1, order)
        one = TruncatedSeries.constant(1, order)
        for n in range(1, order + 1):
            poch = series_mul(poch, one - exp_series(n, order))
            total = total + poch
        lhs = series_mul(exp_series(Fraction(1, 24), order), total)
        for n in range(order + 1):
            expected = Fraction(glaisher_T(n), factorial(n)) * Fraction(-1, 24) ** n
            assert lhs.coeffs[n] == expected


class TestStirling:
    def test_frozen_values(self):
        assert gen_stirling1(3, 1, 0) == 2  # x(x+1)(x+2) = 2x + 3x^2 + x^3
        assert gen_stirling1(2, 1, 1) == -1  # (x-1)x = -x + x^2
        assert gen_stirling1(0, 0, 5) == 1

    def test_out_of_range_is_zero(self):
        assert gen_stirling1(4, 5, 0) == 0
        assert gen_stirling1(4, -1, 2) == 0

    @pytest.mark.parametrize("m", [-2, 0, 1, 4])
    def test_product_expansion_oracle(self, m):
        for n in range(11):
            prod = ExactPoly((1,))
            for i in range(n):
                prod = prod * ExactPoly.from_coeffs([i - m, 1])
            for j in range(n + 1):
                assert gen_stirling1(n, j, m) == prod.coefficient(j)
            assert gen_stirling1(n, n, m) == 1

    @pytest.mark.parametrize("k", [0, 1, 2])
    @pytest.mark.parametrize("u", [-2, -1, 1, Fraction(3, 2)])
    def test_exponential_generating_oracle(self, k, u):
        # sum_j s1(n,j,k) u^j = n! [x^n] (1-x)^(k-u)
        for n in range(9):
            lhs = sum(gen_stirling1(n, j, k) * Fraction(u) ** j for j in range(n + 1))
            sign = -1 if n % 2 else 1
            rhs = sign * rational_binom(Fraction(k) - Fraction(u), n) * factorial(n)
            assert lhs == rhs

    def test_table_type(self):
        t = stirling_table(3, 0)
        assert (t.n, t.m) == (3, 0)
        assert t.coeffs == (0, 2, 3, 1)


class TestFPoly:
    def test_base_cases(self):
        assert f_poly(0, 0, 3) == ExactPoly((1,))
        assert f_poly(1, 0, 0) == ExactPoly((0, -1))
        assert f_poly(2, 3, 0).is_zero()
        assert f_poly(3, -1, 1).is_zero()

    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_definition_matches_recursion(self, m):
        for n in range(9):
            for k in range(n + 1):
                assert f_poly(n, k, m) == f_poly_by_recursion(n, k, m), (n, k, m)

    @given(
        st.integers(min_value=0, max_value=7),
        st.integers(min_value=-3, max_value=3),
        st.integers(min_value=-5, max_value=5),
    )
    def test_k_sum_collapses(self, n, m, x):
        # summing over k applies sum(comb(j, k), k <= j) = 2^j termwise
        total = ExactPoly(())
        for k in range(n + 1):
            total = total + f_poly(n, k, m)
        sign = -1 if n % 2 else 1
        assert total.evaluate(x) == sign * sum(
            gen_stirling1(n, j, m) * (2 * x) ** j for j in range(n + 1)
        )


class TestCArray:
    def test_row_zero_and_boundaries(self):
        arr = c_array(6, 3, 5)
        assert arr.value(0, 0) == 1
        assert arr.value(2, -1) == 0
        assert arr.value(2, 3) == 0

    def test_first_column_is_powers_of_i(self):
        arr = c_array(8, 3, 7)
        for n in range(9):
            assert arr.value(n, 0) == 3**n

    def test_diagonal_is_powers_of_p(self):
        arr = c_array(8, 2, 5)
        for n in range(9):
            assert arr.value(n, n) == 5**n

    def test_recursion_holds(self):
        arr = c_array(7, 4, 11)
        for n in range(7):
            for j in range(n + 2):
                expected = (4 + j * 11) * arr.value(n, j) + 11 * arr.value(n, j - 1)
                assert arr.value(n + 1, j) == expected

    def test_rational_point_generalizes(self):
        i = Fraction(7, 3)
        rows = c_rows(4, i, 5)
        assert rows[1][0] == i
        assert rows[1][1] == 5
        assert rows[2][0] == i * i
        assert rows[2][1] == i * 5 + (i + 5) * 5

    def test_rational_rows_match_integer_array(self):
        assert c_rows(6, 3, 7) == c_array(6, 3, 7).rows

    def test_validates_residue(self):
        with pytest.raises(ValueError):
            c_array(3, 7, 5)


class TestCharacters:
    def test_chi12_period_table(self):
        assert [chi12(n) for n in range(12)] == [0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]
        assert chi12(13) == 1
        assert chi12(-1) == 1  # -1 = 11 mod 12

    def test_chi12_multiplicative(self):
        for a in range(1, 40):
            for b in range(1, 40):
                assert chi12(a * b) == chi12(a) * chi12(b)

    def test_chi12_support_is_units_mod_12(self):
        from math import gcd

        for n in range(1, 100):
            assert (chi12(n) != 0) == (gcd(n, 12) == 1)

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_legendre_matches_square_enumeration(self, p):
        squares = {(x * x) % p for x in range(1, p)}
        for a in range(p):
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre(a, p) == expected

    def test_legendre_frozen_values(self):
        assert legendre(0, 7) == 0
        assert legendre(2, 7) == 1
        assert legendre(5, 7) == -1

    def test_legendre_rejects_even_modulus(self):
        with pytest.raises(ValueError):
            legendre(3, 8)

    def test_is_prime_small(self):
        primes = [n for n in range(60) if is_prime(n)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]

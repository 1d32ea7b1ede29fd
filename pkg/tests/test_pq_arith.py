import math

import pytest

from pqbezier import (
    MAX_DEGREE,
    PQParams,
    one_minus_t_expansion,
    one_minus_t_product,
    pq_binomial,
    pq_binomial_row,
    pq_factorial,
    pq_integer,
)

from conftest import PARAMS_SET
from oracles import product_poly_coeffs


class TestPQParams:
    @pytest.mark.parametrize("p,q", [(0.0, 1.0), (-1.0, 0.5), (1.0, 0.0), (1.0, -2.0)])
    def test_rejects_non_positive(self, p, q):
        with pytest.raises(ValueError):
            PQParams(p, q)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            PQParams(float("nan"), 1.0)
        with pytest.raises(ValueError):
            PQParams(1.0, float("inf"))

    def test_ordered_flag(self):
        assert PQParams(1.0, 0.5).ordered
        assert PQParams(0.7, 0.7).ordered
        assert not PQParams(0.5, 0.9).ordered

    def test_coerces_ints_to_float(self):
        params = PQParams(2, 1)
        assert isinstance(params.p, float) and isinstance(params.q, float)


class TestDegreeGuard:
    @pytest.mark.parametrize("func", [pq_integer, pq_factorial])
    def test_rejects_beyond_max(self, func):
        with pytest.raises(ValueError, match="exceeds"):
            func(MAX_DEGREE + 1, PQParams(1.0, 0.5))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            pq_integer(-1, PQParams(1.0, 0.5))

    def test_max_degree_allowed_for_tame_params(self):
        assert pq_integer(MAX_DEGREE, PQParams(1.0, 0.5)) == pytest.approx(2.0, rel=1e-12)


class TestPQInteger:
    def test_zero_is_empty_sum(self):
        for params in PARAMS_SET:
            assert pq_integer(0, params) == 0.0

    @pytest.mark.parametrize("n", range(11))
    def test_classical_limit(self, n):
        assert pq_integer(n, PQParams(1.0, 1.0)) == float(n)

    def test_hand_values(self):
        assert pq_integer(3, PQParams(2.0, 1.0)) == pytest.approx(7.0, abs=1e-12)
        assert pq_integer(4, PQParams(1.0, 0.5)) == pytest.approx(1.875, abs=1e-12)

    def test_equal_params_closed_form(self):
        # [n] at p = q equals n * p^(n-1); the quotient form cannot compute this.
        assert pq_integer(4, PQParams(0.7, 0.7)) == pytest.approx(4 * 0.7**3, rel=1e-14)

    @pytest.mark.parametrize("params", [p for p in PARAMS_SET if p.p != p.q])
    def test_summation_matches_quotient(self, params):
        for n in range(21):
            quotient = (params.p**n - params.q**n) / (params.p - params.q)
            assert abs(pq_integer(n, params) - quotient) <= 1e-12 * max(1.0, abs(quotient))


class TestPQFactorial:
    def test_empty_product(self):
        for params in PARAMS_SET:
            assert pq_factorial(0, params) == 1.0

    def test_hand_values(self):
        assert pq_factorial(3, PQParams(1.0, 1.0)) == 6.0
        assert pq_factorial(3, PQParams(1.0, 0.5)) == pytest.approx(2.625, abs=1e-12)

    def test_overflow_signalled(self):
        with pytest.raises(OverflowError):
            pq_factorial(64, PQParams(2.0, 1.0))


class TestPQBinomial:
    def test_edges_exact(self):
        for params in PARAMS_SET:
            for n in range(8):
                assert pq_binomial(n, 0, params) == 1.0
                assert pq_binomial(n, n, params) == 1.0

    def test_out_of_range_is_zero(self):
        params = PQParams(0.8, 0.5)
        assert pq_binomial(4, -1, params) == 0.0
        assert pq_binomial(4, 5, params) == 0.0

    def test_hand_values(self):
        assert pq_binomial(2, 1, PQParams(0.8, 0.5)) == pytest.approx(1.3, abs=1e-12)
        assert pq_binomial(4, 2, PQParams(1.0, 0.5)) == pytest.approx(2.1875, abs=1e-12)

    def test_classical_limit_is_integer(self):
        params = PQParams(1.0, 1.0)
        for n in range(21):
            for k in range(n + 1):
                assert pq_binomial(n, k, params) == pytest.approx(math.comb(n, k), abs=1e-9)

    @pytest.mark.parametrize("params", PARAMS_SET)
    def test_pascal_closure_both_forms(self, params):
        p, q = params.p, params.q
        for n in range(1, 21):
            for k in range(n + 1):
                target = pq_binomial(n, k, params)
                first = q ** (n - k) * pq_binomial(n - 1, k - 1, params) + p**k * pq_binomial(
                    n - 1, k, params
                )
                dual = p ** (n - k) * pq_binomial(n - 1, k - 1, params) + q**k * pq_binomial(
                    n - 1, k, params
                )
                assert abs(first - target) <= 1e-12 * max(1.0, abs(target))
                assert abs(dual - target) <= 1e-12 * max(1.0, abs(target))


class TestBinomialRow:
    def test_degree_zero(self):
        assert pq_binomial_row(0, PQParams(0.8, 0.5)) == [1.0]

    def test_classical_row(self):
        assert pq_binomial_row(2, PQParams(1.0, 1.0)) == [1.0, 2.0, 1.0]

    def test_middle_entry_is_p_plus_q(self):
        row = pq_binomial_row(2, PQParams(0.8, 0.5))
        assert row[0] == 1.0 and row[2] == 1.0
        assert row[1] == pytest.approx(1.3, abs=1e-12)

    @pytest.mark.parametrize("params", PARAMS_SET)
    def test_matches_ratio_form_entrywise(self, params):
        for n in range(21):
            row = pq_binomial_row(n, params)
            for k, value in enumerate(row):
                target = pq_binomial(n, k, params)
                assert abs(value - target) <= 1e-12 * max(1.0, abs(target))


class TestOneMinusTProduct:
    def test_empty_product(self):
        for params in PARAMS_SET:
            assert one_minus_t_product(0.37, 0, params) == 1.0

    def test_zero_at_t_one(self):
        for params in PARAMS_SET:
            for n in range(1, 6):
                assert one_minus_t_product(1.0, n, params) == 0.0

    def test_value_at_zero(self):
        assert one_minus_t_product(0.0, 2, PQParams(0.8, 0.5)) == pytest.approx(0.8, abs=1e-15)

    @pytest.mark.parametrize("params", PARAMS_SET)
    def test_matches_convolution_oracle(self, params):
        for n in range(7):
            coeffs = product_poly_coeffs(n, params.p, params.q)
            for i in range(11):
                t = i / 10
                expected = sum(c * t**k for k, c in enumerate(coeffs))
                assert one_minus_t_product(t, n, params) == pytest.approx(
                    expected, rel=1e-12, abs=1e-12
                )


class TestExpansion:
    def test_linear(self):
        for params in PARAMS_SET:
            assert one_minus_t_expansion(1, params) == [1.0, -1.0]

    def test_classical_square(self):
        assert one_minus_t_expansion(2, PQParams(1.0, 1.0)) == [1.0, -2.0, 1.0]

    def test_frozen_coefficients(self):
        coeffs = one_minus_t_expansion(2, PQParams(0.8, 0.5))
        assert coeffs == pytest.approx([0.8, -1.3, 0.5], abs=1e-12)

    @pytest.mark.parametrize("params", PARAMS_SET)
    def test_coefficients_match_convolution(self, params):
        for n in range(9):
            assert one_minus_t_expansion(n, params) == pytest.approx(
                product_poly_coeffs(n, params.p, params.q), rel=1e-12, abs=1e-12
            )

    @pytest.mark.parametrize("params", [p for p in PARAMS_SET if p.p <= 1.0])
    def test_expansion_equals_product_on_grid(self, params):
        # 64 sampled t in [0, 1], n <= 12, absolute 1e-12.
        for n in range(13):
            coeffs = one_minus_t_expansion(n, params)
            for i in range(64):
                t = i / 63
                series = sum(c * t**k for k, c in enumerate(coeffs))
                assert abs(series - one_minus_t_product(t, n, params)) <= 1e-12

    @pytest.mark.parametrize("params", [p for p in PARAMS_SET if p.p > 1.0])
    def test_expansion_equals_product_growing_params(self, params):
        # For p > 1 the alternating series cancels catastrophically at high
        # degree, so the check stops at n = 6 and scales by coefficient size.
        for n in range(7):
            coeffs = one_minus_t_expansion(n, params)
            tol = 1e-12 * max(1.0, max(abs(c) for c in coeffs))
            for i in range(64):
                t = i / 63
                series = sum(c * t**k for k, c in enumerate(coeffs))
                assert abs(series - one_minus_t_product(t, n, params)) <= tol

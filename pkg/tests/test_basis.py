"""Basis layer: two-parameter integers, binomials, products, basis values."""
import random
from fractions import Fraction as F

import pytest

from pqbezier import (
    ModeError,
    PqParams,
    bernstein_basis,
    bernstein_basis_all,
    bernstein_operator,
    operator_nodes,
    pq_binomial,
    pq_expansion_coefficients,
    pq_factorial,
    pq_integer,
    pq_one_minus_pow,
)

from oracles import q_binomial, q_bernstein, random_interior

P21 = PqParams.exact_params(2, 1)
PAIRS = [(F(2), F(1)), (F(3), F(2)), (F(3, 2), F(1, 2)), (F(1), F(1, 2)), (F(5, 4), F(3, 4))]


def exact(p, q):
    return PqParams.exact_params(p, q)


class TestPqInteger:
    def test_known_values(self):
        assert pq_integer(4, P21) == 15
        assert pq_integer(0, P21) == 0
        assert pq_integer(1, P21) == 1

    def test_equal_parameters_give_scaled_count(self):
        for c in (F(1), F(2), F(1, 3)):
            for n in range(1, 7):
                assert pq_integer(n, exact(c, c)) == n * c ** (n - 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            pq_integer(-1, P21)


class TestPqBinomial:
    def test_known_values(self):
        assert pq_binomial(3, 1, P21) == 7
        assert pq_binomial(4, 2, P21) == 35

    def test_matches_factorial_ratio(self):
        for p, q in PAIRS:
            params = exact(p, q)
            for n in range(7):
                for k in range(n + 1):
                    ratio = pq_factorial(n, params) / (
                        pq_factorial(k, params) * pq_factorial(n - k, params)
                    )
                    assert pq_binomial(n, k, params) == ratio

    def test_reduces_to_one_parameter_binomial(self):
        # [n k]_{p,q} = p^(k(n-k)) [n k]_{q/p}: ties the two-parameter
        # recurrence to an independently coded one-parameter oracle
        for p, q in PAIRS:
            for n in range(7):
                for k in range(n + 1):
                    got = pq_binomial(n, k, exact(p, q))
                    assert got == p ** (k * (n - k)) * q_binomial(n, k, q / p)

    def test_out_of_range_is_zero(self):
        assert pq_binomial(3, -1, P21) == 0
        assert pq_binomial(3, 4, P21) == 0


class TestOneMinusProduct:
    def test_known_value(self):
        assert pq_one_minus_pow(0, 2, exact(3, 1)) == 3

    def test_expansion_coefficients_quadratic(self):
        p, q = F(3), F(5)
        assert pq_expansion_coefficients(2, exact(p, q)) == [p, -(p + q), q]

    def test_expansion_matches_product(self):
        rng = random.Random(11)
        for p, q in PAIRS:
            params = exact(p, q)
            for m in range(6):
                coeffs = pq_expansion_coefficients(m, params)
                for _ in range(3):
                    t = random_interior(rng)
                    expanded = sum(c * t**k for k, c in enumerate(coeffs))
                    assert expanded == pq_one_minus_pow(t, m, params)


class TestBasis:
    def test_known_value(self):
        assert bernstein_basis(2, 1, F(1, 2), P21) == F(3, 8)

    def test_vector_of_values(self):
        vec = bernstein_basis_all(2, F(1, 2), P21)
        assert list(vec) == [F(3, 8), F(3, 8), F(1, 4)]
        assert len(vec) == 3
        assert vec[2] == F(1, 4)

    def test_all_matches_single(self):
        rng = random.Random(3)
        for p, q in PAIRS:
            params = exact(p, q)
            for n in range(7):
                t = random_interior(rng)
                vec = bernstein_basis_all(n, t, params)
                for k in range(n + 1):
                    assert vec[k] == bernstein_basis(n, k, t, params)

    def test_reduces_to_one_parameter_basis(self):
        # B_k^n(t; p, q) equals the one-parameter basis at ratio q/p,
        # computed by the oracle's product formula
        rng = random.Random(5)
        for p, q in PAIRS:
            params = exact(p, q)
            for n in range(7):
                t = random_interior(rng)
                for k in range(n + 1):
                    assert bernstein_basis(n, k, t, params) == q_bernstein(
                        n, k, t, q / p
                    )

    def test_partition_of_unity_exact(self):
        rng = random.Random(9)
        for p, q in PAIRS:
            params = exact(p, q)
            for n in range(8):
                t = random_interior(rng)
                assert sum(bernstein_basis_all(n, t, params)) == 1

    def test_partition_of_unity_float(self):
        for p, q in ((2.0, 1.0), (1.5, 0.5), (1.25, 0.75)):
            params = PqParams.float_params(p, q)
            for n in range(8):
                for t in (0.1, 0.5, 0.9):
                    total = sum(bernstein_basis_all(n, t, params))
                    assert abs(total - 1.0) < 1e-12

    def test_out_of_range_index_rejected(self):
        with pytest.raises(ValueError):
            bernstein_basis(2, 3, F(1, 2), P21)

    def test_mode_mixing_rejected(self):
        with pytest.raises(ModeError):
            bernstein_basis(2, 1, 0.5, P21)


class TestOperator:
    def test_nodes_known_values(self):
        assert operator_nodes(2, P21) == [0, F(2, 3), 1]

    def test_reproduces_constants_and_identity(self):
        rng = random.Random(17)
        for p, q in PAIRS:
            params = exact(p, q)
            for n in range(1, 7):
                nodes = operator_nodes(n, params)
                ones = [F(1)] * (n + 1)
                x = random_interior(rng)
                assert bernstein_operator(ones, n, x, params) == 1
                assert bernstein_operator(nodes, n, x, params) == x

    def test_sample_count_checked(self):
        with pytest.raises(ValueError):
            bernstein_operator([1, 2], 2, F(1, 2), P21)

"""
Tests for latticeineq.coefficients (exact coefficient tables)
"""
from fractions import Fraction

import pytest

from latticeineq.coefficients import (
    binom,
    coeff_alpha_beta_gamma,
    coeff_xi,
    coefficient_table,
    combinatorial_identity_check,
    gamma_simplified,
    higher_order_constant,
    improved_hardy_coefficients,
    improved_hardy_tail,
    weight_chain_constant,
    weight_chain_from_tables,
    xi_closed_form,
)
from latticeineq.errors import InequalityError


class TestBinom:
    def test_out_of_range_is_zero(self):
        assert binom(3, 4) == 0
        assert binom(3, -1) == 0
        assert binom(4, 2) == 6


class TestXi:
    """Tests for xi_i^k and the combinatorial identity."""

    def test_top_index_vanishes(self):
        for k in range(1, 8):
            assert coeff_xi(k, k) == 0

    def test_xi_zero_two(self):
        assert coeff_xi(0, 2) == 0

    def test_closed_form_small(self):
        """The double sum matches the closed form for small k."""
        for k in range(1, 7):
            for i in range(k + 1):
                assert coeff_xi(i, k) == xi_closed_form(i, k)

    def test_identity_check(self):
        report = combinatorial_identity_check(10)
        assert report.holds
        assert report.checked == sum(k + 1 for k in range(1, 11))
        assert report.first_failure is None

    def test_index_out_of_range(self):
        with pytest.raises(InequalityError):
            coeff_xi(3, 2)
        with pytest.raises(InequalityError):
            combinatorial_identity_check(0)


class TestRows:
    """Tests for alpha, beta, gamma rows."""

    def test_endpoints(self):
        """alpha_k^k = 0 and beta_k^k = 1."""
        for k in range(1, 8):
            row = coeff_alpha_beta_gamma(k, k)
            assert row.alpha == 0
            assert row.beta == 1

    def test_gamma_first(self):
        """gamma_1^k = (2k-1)^2 / 4."""
        for k in range(1, 8):
            assert gamma_simplified(1, k) == Fraction((2 * k - 1) ** 2, 4)

    def test_gamma_undefined_at_zero(self):
        assert coeff_alpha_beta_gamma(0, 3).gamma is None

    def test_table_consistent(self):
        """Raw and simplified forms agree across the table."""
        table = coefficient_table(8)
        assert len(table) == sum(k + 1 for k in range(1, 9))
        assert all(row.consistent for row in table)

    def test_improved_coefficients(self):
        coeffs = improved_hardy_coefficients(3)
        assert sorted(coeffs) == [1, 2, 3]
        assert coeffs[1] == Fraction(25, 4)
        assert improved_hardy_tail(1) == Fraction(1, 16)


class TestHigherOrder:
    """Tests for higher_order_constant and the weight chain."""

    def test_rellich(self):
        assert higher_order_constant(1, "laplacian") == Fraction(5, 16)

    def test_grad_laplacian(self):
        assert higher_order_constant(1, "grad_laplacian") == Fraction(45, 64)

    def test_weighted_laplacian(self):
        assert higher_order_constant(1, "weighted_laplacian", k=2) == Fraction(1, 2)

    def test_weighted_needs_k(self):
        with pytest.raises(InequalityError):
            higher_order_constant(1, "weighted_laplacian", k=1)
        with pytest.raises(InequalityError):
            higher_order_constant(1, "weighted_grad_laplacian")

    def test_unknown_family(self):
        with pytest.raises(InequalityError):
            higher_order_constant(1, "biharmonic")

    def test_chain_matches_tables(self):
        """k(k-1)(k-3/2)^2 from the raw alpha, beta tables."""
        for k in range(2, 10):
            assert weight_chain_from_tables(k) == weight_chain_constant(k)

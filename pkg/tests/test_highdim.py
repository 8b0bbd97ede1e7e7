"""
Tests for latticeineq.highdim (Hardy inequalities on Z^d)
"""
import math

import pytest

from latticeineq.constants import explicit_constant
from latticeineq.errors import BUDGET, PRECONDITION, InequalityError
from latticeineq.highdim import (
    constant_scaling,
    hardy_constant_bracket,
    hardy_quotient_nd,
    hardy_rayleigh_box,
    indicator_unit_sphere,
    plateau_function,
    plateau_ratio,
)
from latticeineq.lattice import SparseLatticeFunction, grad_energy


class TestHardyQuotientND:
    """Tests for hardy_quotient_nd."""

    def test_unit_vector(self):
        """delta at e_1 in Z^3: energy 6 against 1."""
        report = hardy_quotient_nd(SparseLatticeFunction.delta((1, 0, 0)))
        assert report.ratio == pytest.approx(6.0)
        assert report.holds

    def test_sphere_indicator_below_upper(self):
        for d in range(3, 9):
            report = hardy_quotient_nd(indicator_unit_sphere(d))
            assert report.ratio <= 4 * d

    def test_laplacian_operator(self):
        """k = 1 with the Laplacian holds in d = 5."""
        u = SparseLatticeFunction(5, {(1, 0, 0, 0, 0): 1.0, (0, 2, 0, 0, 0): -0.5})
        report = hardy_quotient_nd(u, k=1, operator="laplacian")
        assert report.holds

    def test_no_lower_bound_in_two_dimensions(self):
        """d = 2 reports constant 0 and says so."""
        report = hardy_quotient_nd(SparseLatticeFunction.delta((1, 0)))
        assert report.constant == 0.0
        assert any("no lower bound" in note for note in report.notes)

    def test_origin_must_vanish(self):
        with pytest.raises(InequalityError) as exc:
            hardy_quotient_nd(SparseLatticeFunction.delta((0, 0, 0)))
        assert exc.value.error_type == PRECONDITION

    def test_bad_arguments(self):
        u = SparseLatticeFunction.delta((1, 0, 0))
        with pytest.raises(InequalityError):
            hardy_quotient_nd(u, operator="curl")
        with pytest.raises(InequalityError):
            hardy_quotient_nd(u, k=-1)


class TestBrackets:
    """Tests for hardy_constant_bracket and constant_scaling."""

    def test_bracket_consistent(self):
        for d in range(3, 17):
            bracket = hardy_constant_bracket(d)
            assert bracket.consistent
            assert bracket.test_ratio <= 4 * d

    def test_bracket_needs_three(self):
        with pytest.raises(InequalityError):
            hardy_constant_bracket(2)

    def test_scaling_rows(self):
        rows = constant_scaling([3, 8, 64])
        assert math.isnan(rows[0]["HR_over_d"])
        assert rows[1]["HR_over_d"] == pytest.approx((16 / 11) / 8)
        assert all(rows[2][c] > 0 for c in ("H_over_d", "HR_over_d", "R_over_d2"))

    def test_rayleigh_above_torus_bound(self):
        estimate = hardy_rayleigh_box(3, 4)
        assert estimate.value >= explicit_constant("C1_lower", 0, 3)
        assert estimate.notes

    def test_rayleigh_budget(self):
        with pytest.raises(InequalityError) as exc:
            hardy_rayleigh_box(3, 10)
        assert exc.value.error_type == BUDGET


class TestPlateau:
    """Tests for the d = 2 plateau family."""

    def test_energy_constant(self):
        for N in (1, 10, 100, 1000):
            assert plateau_ratio(N).energy == pytest.approx(16.0)

    def test_energy_matches_materialised(self):
        """Ring formula agrees with the explicit function."""
        assert grad_energy(plateau_function(4), 2) == pytest.approx(plateau_ratio(4).energy)

    def test_ratio_grows(self):
        ratios = [plateau_ratio(N).ratio for N in (10, 100, 1000)]
        assert ratios[1] - ratios[0] >= 0.5
        assert ratios[2] - ratios[1] >= 0.5

    def test_rejects_zero(self):
        with pytest.raises(InequalityError):
            plateau_ratio(0)

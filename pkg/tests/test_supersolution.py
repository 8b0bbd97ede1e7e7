"""
Tests for latticeineq.supersolution (one-dimensional weighted Hardy)
"""
from fractions import Fraction

import pytest

from latticeineq.errors import DOMAIN, PRECONDITION, InequalityError
from latticeineq.lattice import SparseLatticeFunction
from latticeineq.supersolution import (
    HardyWeightParams,
    SupersolutionTriple,
    b4_closed_form,
    b6_closed_form,
    coeff_b,
    coeff_b_exact,
    graph_supersolution_check,
    hardy_quotient_weighted,
    improvement_check,
    lattice_box_graph,
    power_family_limit_ratio,
    power_triple,
    rayleigh_sharp_estimate,
    regularized_power_phi,
    sharpness_family,
    sign_scan_b,
    supersolution_check,
    weight_dominance_scan,
    weight_w,
)


# --- Fixtures ---

@pytest.fixture
def delta_one():
    """u = delta_1 on N_0."""
    return SparseLatticeFunction.delta((1,))


@pytest.fixture
def decaying():
    """u(0) = 0 followed by a short decaying tail."""
    return SparseLatticeFunction.from_sequence([0.0, 1.0, 0.5, 0.25, 0.125])


class TestWeight:
    """Tests for weight_w."""

    def test_boundary_branch(self):
        """n = 1 uses 1 + 2^a - 2^(a+b)."""
        assert weight_w(HardyWeightParams(1.0, 0.5), 1) == pytest.approx(1 + 2 - 2 ** 1.5)

    def test_interior_value(self):
        """w_{0,1/2}(2) = 2 - sqrt(1/2) - sqrt(3/2)."""
        assert weight_w(HardyWeightParams(0.0, 0.5), 2) == pytest.approx(0.06815, abs=1e-5)

    def test_flat_weight_vanishes(self):
        """alpha = beta = 0 gives w = 0 for n >= 2."""
        for n in range(2, 10):
            assert weight_w(HardyWeightParams(0.0, 0.0), n) == pytest.approx(0.0)

    def test_rejects_zero(self):
        with pytest.raises(InequalityError) as exc:
            weight_w(HardyWeightParams(0.0, 0.5), 0)
        assert exc.value.error_type == DOMAIN


class TestSupersolution:
    """Tests for supersolution_check."""

    def test_power_triple_holds(self):
        """The power pair is a supersolution with equality."""
        report = supersolution_check(power_triple(0.0, 0.5), 1000)
        assert report.holds
        assert report.first_violation is None

    def test_larger_weight_fails(self):
        """w + 1 is too large at the first point."""
        base = power_triple(0.0, 0.5)
        triple = SupersolutionTriple(v=base.v, varphi=base.varphi, w=lambda n: base.w(n) + 1.0)
        report = supersolution_check(triple, 50)
        assert not report.holds
        assert report.first_violation == 1

    def test_varphi_must_be_positive(self):
        triple = SupersolutionTriple(v=lambda n: 1.0, varphi=lambda n: 0.0, w=lambda n: 0.0)
        with pytest.raises(InequalityError) as exc:
            supersolution_check(triple, 5)
        assert exc.value.error_type == PRECONDITION


class TestCoefficientsB:
    """Tests for b_k(alpha)."""

    def test_b4_at_zero(self):
        assert coeff_b_exact(0, 4) == Fraction(5, 64)

    def test_odd_vanishes_at_zero(self):
        assert coeff_b_exact(0, 3) == 0

    def test_b2_at_five(self):
        assert coeff_b_exact(5, 2) == 4

    def test_closed_forms(self):
        """b_4 and b_6 closed forms agree with the binomial definition."""
        for alpha in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(7, 5), Fraction(-2)):
            assert b4_closed_form(alpha) == coeff_b_exact(alpha, 4)
            assert b6_closed_form(alpha) == coeff_b_exact(alpha, 6)

    @pytest.mark.parametrize("k", range(1, 13))
    def test_odd_integer_alpha_sign_pattern(self, k):
        """b_i(2k+1) >= 0 up to i = k+1, vanishes at i = k+2, negative after."""
        alpha = 2 * k + 1
        for i in range(2, 2 * k + 7):
            b = coeff_b_exact(alpha, i)
            if i <= k + 1:
                assert b >= 0, i
            elif i == k + 2:
                assert b == 0
            else:
                assert b < 0, i

    def test_sign_pattern_at_five(self):
        signs = [coeff_b_exact(5, i) for i in range(2, 9)]
        assert "".join("+" if b > 0 else "0" if b == 0 else "-" for b in signs) == "++0----"

    def test_float_path(self):
        assert coeff_b(0.0, 4) == pytest.approx(5 / 64)

    def test_k_below_two(self):
        with pytest.raises(InequalityError):
            coeff_b_exact(0, 1)

    def test_sign_scan(self):
        """b_k(0) >= 0 and b_k(1/2) >= 0 on k = 3..20."""
        table = sign_scan_b([0, Fraction(1, 2)], range(3, 21))
        assert table[Fraction(0)][3] == 0
        assert table[Fraction(0)][4] == 1
        assert all(s >= 0 for row in table.values() for s in row.values())


class TestHardyQuotient:
    """Tests for hardy_quotient_weighted and the improvement."""

    def test_delta_unweighted(self, delta_one):
        report = hardy_quotient_weighted(delta_one, 0.0)
        assert report.ratio == pytest.approx(2.0)
        assert report.constant == pytest.approx(0.25)
        assert report.holds

    def test_delta_alpha_two(self, delta_one):
        report = hardy_quotient_weighted(delta_one, 2.0)
        assert report.lhs == pytest.approx(5.0)
        assert report.rhs_sum == pytest.approx(1.0)

    def test_zero_rejected(self):
        with pytest.raises(InequalityError):
            hardy_quotient_weighted(SparseLatticeFunction(1), 0.0)

    def test_origin_must_vanish(self):
        with pytest.raises(InequalityError):
            hardy_quotient_weighted(SparseLatticeFunction.from_sequence([1.0, 1.0]), 0.0)

    def test_negative_support_rejected(self):
        with pytest.raises(InequalityError):
            hardy_quotient_weighted(SparseLatticeFunction.delta((-1,)), 0.0)

    def test_improvement(self, decaying):
        """The b_k remainder fits under the gap."""
        for alpha in (0.0, 1.0 / 3.0, 0.6):
            report = improvement_check(decaying, alpha)
            assert report.holds
            assert report.terms == 40


class TestSharpness:
    """Tests for the sharpness witnesses."""

    def test_family_shape(self):
        """n^beta up to N, linear cutoff, zero from 2N on."""
        u = sharpness_family(0.0, 0.4, 10)
        assert u.get((0,)) == 0.0
        assert u.get((10,)) == pytest.approx(10 ** 0.4)
        assert u.get((20,)) == 0.0
        assert len(u) == 19

    def test_family_constraint(self):
        with pytest.raises(InequalityError):
            sharpness_family(0.0, 0.5, 10)

    def test_limit_classical(self):
        """alpha = 0: the limit approaches 1/4."""
        assert power_family_limit_ratio(0.0, 0.499) == pytest.approx(0.25, rel=0.02)

    def test_limit_weighted(self):
        """alpha = 6: the limit approaches 25/4."""
        assert power_family_limit_ratio(6.0, -2.501) == pytest.approx(6.25, rel=0.05)

    def test_finite_ratios_decrease(self):
        ratios = [hardy_quotient_weighted(sharpness_family(0.0, 0.499, N), 0.0).ratio for N in (10, 100, 1000)]
        assert ratios[0] > ratios[1] > ratios[2] >= 0.25

    def test_rayleigh_bracket(self):
        """The box eigenvalue is above 1/4 and shrinks with the box."""
        small = rayleigh_sharp_estimate(0.0, 50)
        large = rayleigh_sharp_estimate(0.0, 200)
        assert small >= large >= 0.25 - 1e-9


class TestDominance:
    """Tests for weight_dominance_scan."""

    def test_inside_unit_interval(self):
        assert weight_dominance_scan(0.5).min_gap >= 0

    def test_large_alpha(self):
        assert weight_dominance_scan(2.0).min_gap < 0

    def test_negative_alpha(self):
        assert weight_dominance_scan(-1.0).min_gap < 0

    def test_grid_checked(self):
        with pytest.raises(InequalityError):
            weight_dominance_scan(0.5, [0.0, 0.25])
        with pytest.raises(InequalityError):
            weight_dominance_scan(0.5, [])


class TestGraphSupersolution:
    """Tests for the ground-state form on finite graphs."""

    def test_box_sizes(self):
        assert lattice_box_graph(2).number_of_nodes() == 25
        assert lattice_box_graph(1, dim=3).number_of_nodes() == 27

    def test_ground_state_form(self):
        """The form holds for any positive phi."""
        graph = lattice_box_graph(3)
        u = {(0, 0): 1.0, (1, 0): 2.0, (-1, 2): -0.5}
        for beta in (-1.0, -0.5, 0.5):
            assert graph_supersolution_check(graph, regularized_power_phi(beta), u).holds

    @pytest.mark.parametrize("beta", [-1.0, -0.5, 0.5, 1.5])
    def test_regularized_phi_matches_power_far_out(self, beta):
        """(1 + |n|^2)^(beta/2) and |n|^beta differ by at most |beta|/|n|^2 relatively."""
        phi = regularized_power_phi(beta)
        for point in [(10, 0), (7, -8), (0, 25), (-30, 40), (3, 4, 12)]:
            norm_sq = sum(c * c for c in point)
            power = norm_sq ** (beta / 2.0)
            assert phi(point) == pytest.approx(power, rel=abs(beta) / norm_sq)
        assert phi((0, 0)) == 1.0

    def test_plain_power_away_from_origin(self):
        """|n|^beta works as phi once the support avoids the origin and its neighbours."""
        graph = lattice_box_graph(6)
        u = {(3, 1): 1.0, (4, -2): -0.7, (-3, 3): 0.4}

        def plain(point):
            norm_sq = sum(c * c for c in point)
            return norm_sq ** -0.25 if norm_sq else 1.0

        plain_report = graph_supersolution_check(graph, plain, u)
        regular_report = graph_supersolution_check(graph, regularized_power_phi(-0.5), u)
        assert plain_report.holds
        assert plain_report.lhs == regular_report.lhs

    def test_support_outside_graph(self):
        with pytest.raises(InequalityError):
            graph_supersolution_check(lattice_box_graph(1), regularized_power_phi(-1.0), {(5, 5): 1.0})

"""
Tests for latticeineq.lattice (sparse functions, gradients, boundaries, coarea)
"""
import math

import pytest

from latticeineq.errors import DOMAIN, PRECONDITION, InequalityError
from latticeineq.lattice import (
    SparseLatticeFunction,
    backward_difference,
    coarea_decompose,
    difference_ops,
    edge_boundary,
    grad_energy,
    grad_lp_norm,
    gradient_sq_mass,
    laplacian,
    laplacian_power,
    lp_norm,
    require_zero_at_origin,
    vertex_boundary,
)


# --- Fixtures ---

@pytest.fixture
def delta_2d():
    """Unit mass at the origin of Z^2."""
    return SparseLatticeFunction.delta((0, 0))


@pytest.fixture
def delta_1d():
    return SparseLatticeFunction.delta((0,))


@pytest.fixture
def mixed():
    """Mixed-sign function on Z^2."""
    return SparseLatticeFunction(2, {(0, 0): 2.0, (1, 0): -1.0, (3, 2): 0.5})


class TestSparseLatticeFunction:
    """Tests for SparseLatticeFunction."""

    def test_zeros_dropped(self):
        """Exact zeros are not stored."""
        f = SparseLatticeFunction(2, {(0, 0): 1.0, (1, 1): 0.0})
        assert len(f) == 1
        assert f.get((1, 1)) == 0.0

    def test_equality_ignores_zeros(self):
        """Functions with the same nonzero values are equal."""
        a = SparseLatticeFunction(1, {(0,): 1.0, (2,): 0.0})
        assert a == SparseLatticeFunction.from_sequence([1.0])

    def test_from_sequence_start(self):
        """values[i] sits at start + i."""
        f = SparseLatticeFunction.from_sequence([1.0, 2.0], start=3)
        assert f.get((3,)) == 1.0
        assert f.get((4,)) == 2.0

    def test_wrong_point_length(self):
        """Points must have length dim."""
        with pytest.raises(InequalityError) as exc:
            SparseLatticeFunction(2, {(0,): 1.0})
        assert exc.value.error_type == DOMAIN

    def test_dict_roundtrip_complex(self):
        """to_dict/from_dict keep complex values."""
        f = SparseLatticeFunction(2, {(0, 1): 1 + 2j, (-1, 0): 3.0})
        assert SparseLatticeFunction.from_dict(f.to_dict()) == f

    def test_json(self, mixed):
        """to_json/from_json."""
        assert SparseLatticeFunction.from_json(mixed.to_json()) == mixed

    def test_translate_and_abs(self, mixed):
        """translate shifts the support; abs takes moduli."""
        moved = mixed.translate((1, -1))
        assert moved.get((4, 1)) == 0.5
        assert mixed.abs().get((1, 0)) == 1.0

    def test_items_sorted(self, mixed):
        """items() is ordered by point."""
        points = [p for p, _ in mixed.items()]
        assert points == sorted(points)


class TestNorms:
    """Tests for lp_norm, grad_energy, grad_lp_norm."""

    def test_lp_norm(self, mixed):
        assert lp_norm(mixed, 1) == pytest.approx(3.5)
        assert lp_norm(mixed, math.inf) == pytest.approx(2.0)
        assert lp_norm(SparseLatticeFunction(2), 2) == 0.0

    def test_grad_delta_l1(self, delta_2d):
        """Four edges of size 1."""
        assert grad_lp_norm(delta_2d, 1) == pytest.approx(4.0)

    def test_grad_energy_line(self, delta_1d):
        """delta on Z has gradient energy 2."""
        assert grad_energy(delta_1d, 2) == pytest.approx(2.0)

    def test_grad_energy_domino(self):
        """Two adjacent ones: 6 boundary edges, the shared edge contributes 0."""
        f = SparseLatticeFunction(2, {(0, 0): 1.0, (1, 0): 1.0})
        assert grad_energy(f, 2) == pytest.approx(6.0)

    def test_grad_energy_inf_rejected(self, delta_1d):
        with pytest.raises(InequalityError):
            grad_energy(delta_1d, math.inf)

    def test_p_below_one_rejected(self, delta_1d):
        with pytest.raises(InequalityError):
            lp_norm(delta_1d, 0.5)

    def test_sq_mass_matches_energy(self, mixed):
        """sum_j |D_j f|^2 is the gradient energy."""
        assert gradient_sq_mass(mixed) == pytest.approx(grad_energy(mixed, 2))


class TestDifferenceOperators:
    """Tests for difference operators."""

    def test_backward_difference(self, delta_1d):
        """D u(n) = u(n) - u(n-1)."""
        assert backward_difference(delta_1d, 0) == SparseLatticeFunction(1, {(0,): 1.0, (1,): -1.0})

    def test_laplacian_line(self, delta_1d):
        assert laplacian(delta_1d) == SparseLatticeFunction(1, {(0,): 2.0, (1,): -1.0, (-1,): -1.0})

    def test_bilaplacian_line(self, delta_1d):
        expected = SparseLatticeFunction(1, {(0,): 6.0, (1,): -4.0, (-1,): -4.0, (2,): 1.0, (-2,): 1.0})
        assert laplacian_power(delta_1d, 2) == expected

    def test_laplacian_plane(self, delta_2d):
        assert laplacian(delta_2d).get((0, 0)) == pytest.approx(4.0)

    def test_difference_ops_kinds(self, delta_2d):
        """D returns one component per axis; Delta matches laplacian_power."""
        components = difference_ops(delta_2d, "D", order=2)
        assert len(components) == 2
        assert difference_ops(delta_2d, "Delta", order=2) == laplacian_power(delta_2d, 2)

    def test_difference_ops_errors(self, delta_2d):
        with pytest.raises(InequalityError):
            difference_ops(delta_2d, "D_j")
        with pytest.raises(InequalityError):
            difference_ops(delta_2d, "curl")
        with pytest.raises(InequalityError):
            difference_ops(delta_2d, "Delta", order=0)


class TestBoundaries:
    """Tests for vertex_boundary and edge_boundary."""

    def test_single_point(self):
        assert len(vertex_boundary([(0, 0)])) == 4

    def test_l1_ball(self):
        """The l^1 ball of radius k has 4k + 4 boundary vertices."""
        for k in range(4):
            ball = [(x, y) for x in range(-k, k + 1) for y in range(-k, k + 1) if abs(x) + abs(y) <= k]
            assert len(vertex_boundary(ball)) == 4 * k + 4

    def test_empty(self):
        assert vertex_boundary([]) == frozenset()

    def test_dimension_checked(self):
        with pytest.raises(InequalityError):
            vertex_boundary([(0, 0, 0)], dim=2)

    def test_edge_boundary(self):
        """A domino has 6 boundary edges."""
        assert len(edge_boundary([(0, 0), (1, 0)])) == 6


class TestCoarea:
    """Tests for coarea_decompose."""

    def test_delta_line(self, delta_1d):
        report = coarea_decompose(delta_1d, 2)
        assert report.direct == pytest.approx(2.0)
        assert report.consistent()

    def test_two_levels(self):
        """Two level intervals, p = 1."""
        report = coarea_decompose(SparseLatticeFunction.from_sequence([2.0, 1.0]), 1)
        assert report.direct == pytest.approx(4.0)
        assert [level.boundary_edges for level in report.levels] == [2, 2]
        assert report.consistent()

    def test_several_p(self, mixed):
        """plain, modified and direct agree for f >= 0."""
        for p in (1.0, 1.5, 2.0, 3.0):
            assert coarea_decompose(mixed.abs(), p).consistent()

    def test_negative_rejected(self, mixed):
        with pytest.raises(InequalityError):
            coarea_decompose(mixed, 2)

    def test_inf_rejected(self, delta_1d):
        with pytest.raises(InequalityError):
            coarea_decompose(delta_1d, math.inf)


class TestRequireZeroAtOrigin:
    """Tests for require_zero_at_origin."""

    def test_raises(self, delta_1d):
        with pytest.raises(InequalityError) as exc:
            require_zero_at_origin(delta_1d)
        assert exc.value.error_type == PRECONDITION

    def test_passes(self):
        require_zero_at_origin(SparseLatticeFunction.delta((1,)))

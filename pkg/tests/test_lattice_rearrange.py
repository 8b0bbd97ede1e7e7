"""
Tests for latticeineq.lattice_rearrange (rearrangement along a labelling)
"""
import math

import pytest

from labellings import L1Enumeration, SpiralEnumeration, WangWangEnumeration
from latticeineq.config import SEARCH_SUPPORT_SIZE
from latticeineq.errors import InequalityError
from latticeineq.lattice import SparseLatticeFunction
from latticeineq.lattice_rearrange import (
    RearrangementRatio,
    SearchResult,
    boundary_window,
    boundary_window_check,
    counterexample_search,
    degree_fact_check,
    rearrange_along,
    rearrangement_bound,
    rearrangement_ratio,
)


# --- Fixtures ---

@pytest.fixture
def staircase():
    """Indicator of five cells whose edge boundary beats the plus shape."""
    cells = [(0, 0), (1, 0), (1, 1), (0, 1), (-1, 1)]
    return SparseLatticeFunction(2, {c: 1.0 for c in cells})


@pytest.fixture
def bump():
    """1 at the origin, 1/2 on its four neighbours."""
    values = {(0, 0): 1.0, (1, 0): 0.5, (-1, 0): 0.5, (0, 1): 0.5, (0, -1): 0.5}
    return SparseLatticeFunction(2, values)


class TestRearrangeAlong:
    """Tests for rearrange_along."""

    def test_spiral_example(self):
        """Largest value at v_1, next at v_2, ..."""
        f = SparseLatticeFunction(2, {(5, 5): 3.0, (-2, 1): 1.0, (0, 3): 2.0})
        star = rearrange_along(f, SpiralEnumeration())
        assert star.to_dict() == SparseLatticeFunction(2, {(0, 0): 3.0, (1, 0): 2.0, (1, 1): 1.0}).to_dict()

    def test_uses_moduli(self):
        """Negative values are rearranged by modulus."""
        f = SparseLatticeFunction(2, {(4, 4): -2.0, (1, 1): 1.0})
        star = rearrange_along(f, WangWangEnumeration())
        assert star.get((0, 0)) == pytest.approx(2.0)
        assert star.get((0, 1)) == pytest.approx(1.0)

    def test_dimension_mismatch(self):
        """A Z^3 function cannot be rearranged along a Z^2 labelling."""
        with pytest.raises(InequalityError):
            rearrange_along(SparseLatticeFunction.delta((0, 0, 0)), SpiralEnumeration())


class TestBounds:
    """Tests for rearrangement_bound."""

    def test_spiral(self):
        assert rearrangement_bound(SpiralEnumeration(), 2.0) == pytest.approx(8.0)

    def test_wang_wang(self):
        assert rearrangement_bound(WangWangEnumeration(), 2.0) == pytest.approx(math.sqrt(2))
        assert rearrangement_bound(WangWangEnumeration(), math.inf) == pytest.approx(1.0)
        assert rearrangement_bound(WangWangEnumeration(dim=3), 2.0) == pytest.approx(math.sqrt(3))

    def test_l1_has_none(self):
        """No built-in bound for the l^1 labelling."""
        assert rearrangement_bound(L1Enumeration(), 2.0) is None

    def test_window_bound(self):
        """(c + 1) (2d)^(1/p)."""
        assert rearrangement_bound(L1Enumeration(), 2.0, c=1) == pytest.approx(4.0)


class TestRearrangementRatio:
    """Tests for rearrangement_ratio."""

    def test_wang_wang_exceeds_one(self, staircase):
        """Wang-Wang is not contractive at p = 2."""
        report = rearrangement_ratio(staircase, WangWangEnumeration(), 2.0)
        assert report.original == pytest.approx(math.sqrt(10))
        assert report.rearranged == pytest.approx(math.sqrt(12))
        assert report.ratio == pytest.approx(math.sqrt(1.2))
        assert report.holds

    def test_spiral_exceeds_one(self, bump):
        """Spiral is not contractive at p = 2."""
        report = rearrangement_ratio(bump, SpiralEnumeration(), 2.0)
        assert report.ratio == pytest.approx(math.sqrt(4.5 / 4.0))
        assert report.holds

    def test_spiral_contractive_at_one(self, bump):
        """At p = 1 the same function is contracted."""
        report = rearrangement_ratio(bump, SpiralEnumeration(), 1.0)
        assert report.ratio == pytest.approx(7.0 / 8.0)

    def test_l1_without_bound(self, bump):
        """Without a bound the report holds vacuously and says so."""
        report = rearrangement_ratio(bump, L1Enumeration(), 2.0)
        assert report.bound is None
        assert report.holds
        assert report.notes

    def test_zero_rejected(self):
        with pytest.raises(InequalityError):
            rearrangement_ratio(SparseLatticeFunction(2), SpiralEnumeration())

    def test_to_dict(self):
        """to_dict carries ratio and holds."""
        report = RearrangementRatio("spiral", 2.0, 2.0, 3.0, 8.0)
        data = report.to_dict()
        assert data["ratio"] == pytest.approx(1.5)
        assert data["holds"] is True


class TestPrefixFacts:
    """Tests for boundary_window and degree_fact_check."""

    def test_wang_wang_window(self):
        """Wang-Wang prefix boundaries are the next sigma(n) labels."""
        window = boundary_window(WangWangEnumeration(), 100)
        assert window.c == 1
        assert boundary_window_check(WangWangEnumeration(), 1, 100)

    def test_wang_wang_three_dimensions(self):
        assert boundary_window(WangWangEnumeration(dim=3), 60).c == 1

    def test_short_sigma(self):
        """sigma must cover n_max."""
        with pytest.raises(InequalityError):
            boundary_window(SpiralEnumeration(), 10, sigma=[4, 6])

    def test_degree_fact(self):
        """Boundary vertices of Wang-Wang prefixes see at most d prefix points."""
        assert degree_fact_check(WangWangEnumeration(), 200)
        assert degree_fact_check(WangWangEnumeration(dim=3), 100)


class TestCounterexampleSearch:
    """Tests for counterexample_search."""

    def test_budget_respected(self):
        """The search stops near the evaluation budget."""
        result = counterexample_search(SpiralEnumeration(), p=2.0, budget=200, seed=1)
        assert result.iterations <= 200 + 2 * SEARCH_SUPPORT_SIZE
        assert result.witness is not None

    def test_deterministic(self):
        """Same seed, same outcome."""
        a = counterexample_search(WangWangEnumeration(), p=2.0, budget=150, seed=7)
        b = counterexample_search(WangWangEnumeration(), p=2.0, budget=150, seed=7)
        assert a.best_ratio == b.best_ratio
        assert a.iterations == b.iterations

    def test_witness_ratio_matches(self):
        """The reported best ratio belongs to the witness."""
        result = counterexample_search(SpiralEnumeration(), p=2.0, budget=100, seed=3)
        again = rearrangement_ratio(result.witness, SpiralEnumeration(), 2.0)
        assert again.ratio == pytest.approx(result.best_ratio)

    def test_rejects_three_dimensions(self):
        with pytest.raises(InequalityError):
            counterexample_search(WangWangEnumeration(dim=3), budget=10)

    def test_rejects_empty_budget(self):
        with pytest.raises(InequalityError):
            counterexample_search(SpiralEnumeration(), budget=0)

    def test_found_threshold(self):
        """found means a ratio strictly above 1."""
        assert SearchResult("spiral", 2.0, 0, 1, 1.01, None).found
        assert not SearchResult("spiral", 2.0, 0, 1, 1.0, None).found
        assert SearchResult("spiral", 2.0, 0, 1, 1.0, None).to_dict()["witness"] is None

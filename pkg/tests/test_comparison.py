"""
Tests for latticeineq.comparison (comparison graph and the psi map)
"""
import math

import networkx as nx
import pytest

from labellings import SpiralEnumeration
from latticeineq.comparison import (
    ComparisonGraph,
    comparison_function,
    comparison_gradient,
    comparison_lemma_check,
    lattice_comparison_graph,
    psi_map,
    psi_scan,
    structure_check,
)
from latticeineq.errors import InequalityError
from latticeineq.lattice import SparseLatticeFunction


# --- Fixtures ---

@pytest.fixture
def graph():
    """G_c of Z^2 with children known up to node 50."""
    return lattice_comparison_graph(50)


@pytest.fixture
def spiral():
    return SpiralEnumeration()


class TestComparisonGraph:
    """Tests for ComparisonGraph."""

    def test_children(self, graph):
        """First children intervals of G_c for Z^2."""
        assert graph.children(1) == [2, 3, 4, 5]
        assert graph.children(2) == [6, 7, 8]
        assert graph.children(3) == [9, 10]
        assert graph.children(4) == [11, 12]
        assert graph.children(5) == [13]

    def test_ball_sizes(self):
        """Balls of G_c match l^1 balls of Z^2."""
        assert lattice_comparison_graph(13).ball_sizes(3) == [1, 5, 13, 25]

    def test_parent_and_depth(self, graph):
        """Parents and depths follow the intervals."""
        assert graph.parent(7) == 2
        assert graph.depth(1) == 0
        assert graph.depth(14) == 3

    def test_structure(self, graph):
        """Tree, no leaves, interval boundaries."""
        report = structure_check(graph)
        assert report.holds
        assert report.failures == []

    def test_any_nondecreasing_sigma(self):
        """Any nondecreasing sigma with sigma(1) >= 2 gives the same structure."""
        report = structure_check(ComparisonGraph([2, 2, 3, 5, 5, 5, 9]))
        assert report.holds

    def test_networkx_export(self, graph):
        """The exported graph is a tree on node_count nodes."""
        g = graph.to_networkx()
        assert g.number_of_nodes() == graph.node_count
        assert nx.is_tree(g)

    def test_edge_list(self):
        """One "parent child" line per edge."""
        lines = ComparisonGraph([2, 3]).edge_list().splitlines()
        assert lines[0] == "1 2"
        assert len(lines) == ComparisonGraph([2, 3]).node_count - 1

    def test_rejects_decreasing_sigma(self):
        """sigma must be nondecreasing."""
        with pytest.raises(InequalityError):
            ComparisonGraph([4, 3])

    def test_rejects_small_sigma_one(self):
        """sigma(1) >= 2."""
        with pytest.raises(InequalityError):
            ComparisonGraph([1, 2])

    def test_path_to_ancestor(self, graph):
        """path_to_ancestor walks parents."""
        assert graph.path_to_ancestor(14, 2) == [2, 6, 14]
        with pytest.raises(InequalityError):
            graph.path_to_ancestor(14, 3)


class TestComparisonLemma:
    """Tests for the comparison function and lemma."""

    def test_comparison_function_sorts_moduli(self):
        """f_c lists |f| in decreasing order."""
        f = SparseLatticeFunction(2, {(0, 0): -1.0, (3, 1): 2.0, (1, 1): 0.5})
        assert list(comparison_function(f)) == [2.0, 1.0, 0.5]

    def test_delta(self):
        """delta in Z^2 at p = 2: both sides equal 2."""
        report = comparison_lemma_check(SparseLatticeFunction.delta((0, 0)), 2.0)
        assert report.lhs == pytest.approx(2.0)
        assert report.rhs_sum == pytest.approx(2.0)
        assert report.holds

    def test_random_like_function(self):
        """A spread-out function satisfies the lemma for several p."""
        f = SparseLatticeFunction(2, {(0, 0): 3.0, (2, 0): 1.0, (0, -3): 2.0, (1, 1): 0.5})
        for p in (1.0, 1.5, 2.0, 3.0):
            assert comparison_lemma_check(f, p).holds

    def test_gradient_inf(self):
        """p = inf takes the largest tree difference."""
        graph = ComparisonGraph([4, 6, 7])
        assert comparison_gradient([3.0, 1.0], graph, math.inf) == pytest.approx(3.0)

    def test_zero_rejected(self):
        """f = 0 is rejected."""
        with pytest.raises(InequalityError):
            comparison_lemma_check(SparseLatticeFunction(2), 2.0)

    def test_other_dimension_needs_sigma(self):
        """In d = 3 sigma must be passed."""
        with pytest.raises(InequalityError):
            comparison_lemma_check(SparseLatticeFunction.delta((0, 0, 0)), 2.0)


class TestPsi:
    """Tests for psi_map and psi_scan."""

    def test_edge_one_two(self, graph, spiral):
        """(1, 2) maps to the tree edge itself."""
        assert psi_map(1, 2, spiral, graph) == [1, 2]

    def test_edge_two_eleven(self, graph, spiral):
        """(2, 11) goes down two levels to 14."""
        assert psi_map(2, 11, spiral, graph) == [2, 6, 14]

    def test_order_does_not_matter(self, graph, spiral):
        """psi_map sorts its arguments."""
        assert psi_map(11, 2, spiral, graph) == psi_map(2, 11, spiral, graph)

    def test_rejects_non_edge(self, graph, spiral):
        """Labels 1 and 3 are diagonal in the spiral."""
        with pytest.raises(InequalityError):
            psi_map(1, 3, spiral, graph)

    def test_scan_bounds(self):
        """Path lengths and multiplicities stay within the proven bounds."""
        scan = psi_scan(300)
        assert scan.holds
        assert scan.max_length <= 4
        assert scan.max_multiplicity <= 16
        assert sum(scan.length_histogram.values()) == scan.edges

    def test_scan_rejects_zero(self):
        """i_max >= 1."""
        with pytest.raises(InequalityError):
            psi_scan(0)

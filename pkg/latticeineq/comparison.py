"""
The universal comparison graph G_c of a graph with isoperimetric numbers sigma.

G_c lives on {1, 2, ...}; the neighbours of n above n are the integers in
((n-1) + sigma(n-1), n + sigma(n)] with sigma(0) = 1. Every n >= 2 then has
exactly one smaller neighbour, so G_c is a tree rooted at 1.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from labellings import Enumeration, SpiralEnumeration

from .errors import domain_error
from .isoperimetry import iso_sequence
from .lattice import SparseLatticeFunction, grad_lp_norm, norm_l1
from .reports import QuotientReport

logger = logging.getLogger(__name__)


class ComparisonGraph:
    """
    Children intervals, parents and depths of G_c for nodes 1..n_max.

    Nodes up to n_max + sigma(n_max) are known; only nodes <= n_max have
    their children listed.
    """

    def __init__(self, sigma: Sequence[int]):
        sigma = [int(s) for s in sigma]
        if not sigma:
            raise domain_error("sigma must list at least sigma(1)")
        if sigma[0] < 2:
            raise domain_error("sigma(1) must be >= 2", sigma_1=sigma[0])
        for n in range(1, len(sigma)):
            if sigma[n] < sigma[n - 1]:
                raise domain_error("sigma must be nondecreasing", n=n + 1, value=sigma[n], previous=sigma[n - 1])
        self._sigma = [1] + sigma
        self.n_max = len(sigma)
        self._parent: Dict[int, int] = {}
        self._depth: Dict[int, int] = {1: 0}
        for n in range(1, self.n_max + 1):
            lo, hi = self.children_range(n)
            for m in range(lo, hi + 1):
                self._parent[m] = n
                self._depth[m] = self._depth[n] + 1

    @property
    def node_count(self) -> int:
        return self.n_max + self._sigma[self.n_max]

    def sigma(self, n: int) -> int:
        if not 0 <= n <= self.n_max:
            raise domain_error(f"sigma({n}) outside the supplied range 0..{self.n_max}")
        return self._sigma[n]

    def children_range(self, n: int) -> Tuple[int, int]:
        """Inclusive (first, last) child of n."""
        return (n - 1) + self.sigma(n - 1) + 1, n + self.sigma(n)

    def children(self, n: int) -> List[int]:
        lo, hi = self.children_range(n)
        return list(range(lo, hi + 1))

    def parent(self, m: int) -> int:
        if m not in self._parent:
            raise domain_error(f"node {m} has no parent in the known range", node_count=self.node_count)
        return self._parent[m]

    def depth(self, m: int) -> int:
        if m not in self._depth:
            raise domain_error(f"node {m} outside the known range", node_count=self.node_count)
        return self._depth[m]

    def edges(self) -> List[Tuple[int, int]]:
        return [(self._parent[m], m) for m in range(2, self.node_count + 1)]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.node_count + 1))
        graph.add_edges_from(self.edges())
        return graph

    def edge_list(self) -> str:
        """One "parent child" pair per line."""
        return "".join(f"{a} {b}\n" for a, b in self.edges())

    def sphere_sizes(self, r_max: int) -> List[int]:
        """|S(r)| for r = 0..r_max; spheres reaching past node_count come out short."""
        counts = Counter(self._depth.values())
        return [counts.get(r, 0) for r in range(r_max + 1)]

    def ball_sizes(self, r_max: int) -> List[int]:
        return list(np.cumsum(self.sphere_sizes(r_max)).astype(int))

    def descendant_levels(self, i: int):
        """Yield (t, first, last): the descendants of i at distance t form an interval."""
        lo, hi = i, i
        t = 0
        while hi <= self.n_max:
            lo = self.children_range(lo)[0]
            hi = self.children_range(hi)[1]
            t += 1
            yield t, lo, hi

    def path_to_ancestor(self, k: int, i: int) -> List[int]:
        """[i, ..., k] along the tree; i must be an ancestor of k."""
        path = [k]
        while path[-1] != i:
            if path[-1] == 1:
                raise domain_error(f"{i} is not an ancestor of {k}")
            path.append(self.parent(path[-1]))
        return path[::-1]


@dataclass
class StructureReport:
    """Tree, leaf and boundary-interval properties of a comparison graph."""
    is_tree: bool
    no_leaves: bool
    boundary_intervals: bool
    failures: List[int] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.is_tree and self.no_leaves and self.boundary_intervals


def structure_check(graph: ComparisonGraph) -> StructureReport:
    """
    Check on the known range that G_c is a tree, that every listed node has
    degree >= 2 and that the boundary of {1..n} is {n+1 .. n+sigma(n)}.
    """
    g = graph.to_networkx()
    failures = []
    no_leaves = all(g.degree(n) >= 2 for n in range(1, graph.n_max + 1))
    for n in range(1, graph.n_max + 1):
        boundary = {y for x in range(1, n + 1) for y in g.neighbors(x) if y > n}
        if boundary != set(range(n + 1, n + graph.sigma(n) + 1)):
            failures.append(n)
    return StructureReport(nx.is_tree(g), no_leaves, not failures, failures)


def lattice_comparison_graph(n_max: int, d: int = 2) -> ComparisonGraph:
    """G_c built from the Wang-Wang isoperimetric numbers of Z^d."""
    return ComparisonGraph(iso_sequence(n_max, d))


# -------------------------
# COMPARISON FUNCTION
# -------------------------

def comparison_function(f: SparseLatticeFunction) -> np.ndarray:
    """f_c(k) = k-th largest value of |f|, as an array indexed from k = 1 at position 0."""
    return np.sort(np.abs(f.values_array()).astype(float))[::-1]


def comparison_gradient(values: np.ndarray, graph: ComparisonGraph, p: float) -> float:
    """||grad f_c||_p on G_c for f_c with finite support 1..len(values)."""
    size = len(values)
    if size > graph.n_max:
        raise domain_error("comparison graph too small for this support", support=size, n_max=graph.n_max)
    padded = np.zeros(graph.node_count + 1)
    padded[1:size + 1] = values
    last = size + graph.sigma(size) if size else 1
    diffs = np.array([abs(padded[graph.parent(m)] - padded[m]) for m in range(2, last + 1)])
    if diffs.size == 0:
        return 0.0
    if p == math.inf:
        return float(diffs.max())
    return float(np.sum(diffs ** p) ** (1.0 / p))


def comparison_lemma_check(
    f: SparseLatticeFunction,
    p: float,
    sigma: Optional[Sequence[int]] = None,
) -> QuotientReport:
    """
    ||grad f||_p on Z^d against ||grad f_c||_p on G_c, constant 1.

    sigma defaults to the isoperimetric numbers of Z^2; other dimensions
    must pass them explicitly.
    """
    if f.is_zero():
        raise domain_error("f vanishes identically")
    size = len(f)
    if sigma is None:
        if f.dim != 2:
            raise domain_error("isoperimetric numbers are built in only for d = 2; pass sigma", d=f.dim)
        sigma = iso_sequence(size, 2)
    graph = ComparisonGraph(sigma)
    moduli = f.abs()
    original = grad_lp_norm(moduli, p)
    compared = comparison_gradient(comparison_function(moduli), graph, p)
    return QuotientReport.build(f"comparison_lemma_p{p:g}", original, compared, 1.0)


# -------------------------
# EDGES TO PATHS
# -------------------------

def psi_map(i: int, j: int, labelling: Enumeration, graph: ComparisonGraph) -> List[int]:
    """
    The tree path from i to the smallest descendant k >= j of i.

    (i, j) must be a lattice edge under the labelling.
    """
    if i > j:
        i, j = j, i
    if norm_l1(tuple(a - b for a, b in zip(labelling.point(i), labelling.point(j)))) != 1:
        raise domain_error(f"({i}, {j}) is not a lattice edge")
    for _, lo, hi in graph.descendant_levels(i):
        if hi >= j:
            return graph.path_to_ancestor(max(lo, j), i)
    raise domain_error("comparison graph too small for this edge", i=i, j=j, n_max=graph.n_max)


@dataclass
class PsiScan:
    """Path lengths and edge multiplicities of psi over all lattice edges with i <= i_max."""
    i_max: int
    edges: int
    max_length: int
    max_multiplicity: int
    neighbour_bound_holds: bool
    length_histogram: Dict[int, int] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.max_length <= 4 and self.max_multiplicity <= 16 and self.neighbour_bound_holds


def psi_scan(i_max: int, labelling: Optional[Enumeration] = None) -> PsiScan:
    """
    Run psi over every spiral edge (i, j), i < j, i <= i_max.

    Also checks the neighbour bound j <= i + 7 sqrt(i).
    """
    if i_max < 1:
        raise domain_error("i_max must be >= 1", i_max=i_max)
    labelling = labelling or SpiralEnumeration()
    graph = lattice_comparison_graph(i_max + 8 * math.isqrt(i_max) + 64)
    multiplicity: Counter = Counter()
    lengths: Counter = Counter()
    bound_ok = True
    edges = 0
    for i in range(1, i_max + 1):
        x = labelling.point(i)
        for axis in range(2):
            for step in (1, -1):
                y = list(x)
                y[axis] += step
                j = labelling.label(y)
                if j < i:
                    continue
                edges += 1
                if j > i + 7 * math.sqrt(i):
                    bound_ok = False
                path = psi_map(i, j, labelling, graph)
                lengths[len(path) - 1] += 1
                multiplicity.update(zip(path[:-1], path[1:]))
    logger.info("psi scan up to %d: %d edges", i_max, edges)
    return PsiScan(
        i_max=i_max,
        edges=edges,
        max_length=max(lengths),
        max_multiplicity=max(multiplicity.values()),
        neighbour_bound_holds=bound_ok,
        length_histogram=dict(sorted(lengths.items())),
    )

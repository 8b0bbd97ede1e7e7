"""
Decreasing rearrangement of functions on Z^d along a labelling.

f* puts the k-th largest value of |f| on v_k. Its gradient is compared with
the gradient of f against the bound attached to the labelling:

    spiral (d = 2)           4^(1 + 1/p)
    Wang-Wang (d = 2)        2^(1/p)
    Wang-Wang (d >= 3)       d^(1/p)
    any labelling whose prefix boundaries sit inside the next c * sigma(n)
    labels                   (c + 1) * (2d)^(1/p)
"""
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from labellings import Enumeration

from .config import DEFAULT_SEED, INEQUALITY_SLACK, SEARCH_BOX, SEARCH_SUCCESS_MARGIN, SEARCH_SUPPORT_SIZE
from .errors import domain_error
from .isoperimetry import iso_sequence, prefix_walk
from .lattice import Point, SparseLatticeFunction, grad_lp_norm

logger = logging.getLogger(__name__)


def rearrange_along(f: SparseLatticeFunction, enumeration: Enumeration) -> SparseLatticeFunction:
    """f* with ties kept in support order."""
    if f.dim != enumeration.dim:
        raise domain_error("labelling and function disagree on the dimension", f=f.dim, labelling=enumeration.dim)
    moduli = np.abs(f.values_array()).astype(float)
    ordered = moduli[np.argsort(-moduli, kind="stable")]
    points = enumeration.prefix(len(ordered))
    return SparseLatticeFunction(f.dim, dict(zip(points, ordered)))


def rearrangement_bound(enumeration: Enumeration, p: float, c: Optional[int] = None) -> Optional[float]:
    """The bound on ||grad f*||_p / ||grad f||_p for this labelling, None if none applies."""
    inv = 0.0 if p == math.inf else 1.0 / p
    d = enumeration.dim
    if c is not None:
        return (c + 1) * (2 * d) ** inv
    if enumeration.name == "spiral":
        return 4.0 ** (1 + inv)
    if enumeration.name == "wang_wang":
        return 2.0 ** inv if d == 2 else float(d) ** inv
    return None


@dataclass
class RearrangementRatio:
    """||grad f*||_p next to ||grad f||_p and the labelling's bound."""
    labelling: str
    p: float
    original: float
    rearranged: float
    bound: Optional[float]
    notes: List[str] = field(default_factory=list)

    @property
    def ratio(self) -> float:
        return self.rearranged / self.original if self.original > 0 else math.inf

    @property
    def holds(self) -> bool:
        if self.bound is None:
            return True
        limit = self.bound * self.original
        return self.rearranged <= limit + INEQUALITY_SLACK * max(1.0, limit)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "labelling": self.labelling,
            "p": self.p,
            "original": self.original,
            "rearranged": self.rearranged,
            "ratio": self.ratio,
            "bound": self.bound,
            "holds": self.holds,
            "notes": list(self.notes),
        }


def rearrangement_ratio(
    f: SparseLatticeFunction,
    enumeration: Enumeration,
    p: float = 2.0,
    c: Optional[int] = None,
) -> RearrangementRatio:
    if f.is_zero():
        raise domain_error("f vanishes identically")
    star = rearrange_along(f, enumeration)
    bound = rearrangement_bound(enumeration, p, c)
    notes = [] if bound is not None else ["no bound applies; pass the boundary window c"]
    return RearrangementRatio(
        labelling=enumeration.name,
        p=p,
        original=grad_lp_norm(f, p),
        rearranged=grad_lp_norm(star, p),
        bound=bound,
        notes=notes,
    )


# -------------------------
# PREFIX BOUNDARIES
# -------------------------

@dataclass
class BoundaryWindow:
    """Smallest c with boundary({v_1..v_n}) inside {v_{n+1} .. v_{n + c sigma(n)}} for n <= n_max."""
    labelling: str
    n_max: int
    c: int
    worst_n: int


def boundary_window(
    enumeration: Enumeration,
    n_max: int,
    sigma: Optional[Sequence[int]] = None,
) -> BoundaryWindow:
    """
    Scan the prefixes of a labelling.

    sigma defaults to the Wang-Wang prefix perimeters in the same dimension;
    these are the isoperimetric numbers in d = 2 and upper bounds for them
    in d >= 3.
    """
    if n_max < 1:
        raise domain_error("n_max must be >= 1", n_max=n_max)
    sigma = list(sigma) if sigma is not None else iso_sequence(n_max, enumeration.dim)
    if len(sigma) < n_max:
        raise domain_error("sigma is shorter than n_max", length=len(sigma), n_max=n_max)
    c, worst = 0, 1
    for step in prefix_walk(enumeration, n_max):
        need = -(-(step.max_boundary_label - step.n) // sigma[step.n - 1])
        if need > c:
            c, worst = need, step.n
    logger.info("%s boundary window up to n=%d: c=%d (first reached at n=%d)", enumeration.name, n_max, c, worst)
    return BoundaryWindow(enumeration.name, n_max, c, worst)


def boundary_window_check(
    enumeration: Enumeration,
    c: int,
    n_max: int,
    sigma: Optional[Sequence[int]] = None,
) -> bool:
    return boundary_window(enumeration, n_max, sigma).c <= c


def degree_fact_check(enumeration: Enumeration, n_max: int) -> bool:
    """Every boundary vertex of every prefix n <= n_max has at most d neighbours inside."""
    return all(
        step.max_inside_neighbours <= enumeration.dim
        for step in prefix_walk(enumeration, n_max, with_labels=False)
    )


# -------------------------
# COUNTEREXAMPLE SEARCH
# -------------------------

@dataclass
class SearchResult:
    labelling: str
    p: float
    seed: int
    iterations: int
    best_ratio: float
    witness: Optional[SparseLatticeFunction]

    @property
    def found(self) -> bool:
        return self.best_ratio > 1 + SEARCH_SUCCESS_MARGIN

    def to_dict(self) -> Dict[str, Any]:
        return {
            "labelling": self.labelling,
            "p": self.p,
            "seed": self.seed,
            "iterations": self.iterations,
            "best_ratio": self.best_ratio,
            "found": self.found,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }


def _random_support(rng: np.random.Generator, size: int, box: int) -> List[Point]:
    """A connected set of `size` cells grown inside [-box, box]^2."""
    start = tuple(int(c) for c in rng.integers(-box, box + 1, size=2))
    cells = [start]
    while len(cells) < size:
        x = cells[int(rng.integers(len(cells)))]
        axis = int(rng.integers(2))
        step = 1 if rng.random() < 0.5 else -1
        y = list(x)
        y[axis] += step
        y = tuple(y)
        if max(abs(y[0]), abs(y[1])) <= box and y not in cells:
            cells.append(y)
    return cells


def _ratio(points: List[Point], values: np.ndarray, enumeration: Enumeration, p: float) -> float:
    f = SparseLatticeFunction(2, dict(zip(points, values)))
    if f.is_zero():
        return 0.0
    return rearrangement_ratio(f, enumeration, p).ratio


def counterexample_search(
    enumeration: Enumeration,
    p: float = 2.0,
    support_size: int = SEARCH_SUPPORT_SIZE,
    budget: int = 2000,
    seconds: Optional[float] = None,
    seed: int = DEFAULT_SEED,
    box: int = SEARCH_BOX,
) -> SearchResult:
    """
    Look for f with ||grad f*||_p > ||grad f||_p on Z^2.

    Random connected supports in [-box, box]^2 with random values, each
    followed by coordinate descent on the values. Stops at the first witness
    above 1 + SEARCH_SUCCESS_MARGIN, after `budget` ratio evaluations, or
    after `seconds` of wall time.
    """
    if enumeration.dim != 2:
        raise domain_error("the search runs on Z^2", dim=enumeration.dim)
    if support_size < 1 or support_size > (2 * box + 1) ** 2:
        raise domain_error("support size does not fit the search box", support_size=support_size, box=box)
    if budget < 1:
        raise domain_error("budget must be >= 1", budget=budget)
    rng = np.random.default_rng(seed)
    start = time.monotonic()
    iterations = 0
    best_ratio = -math.inf
    best_witness: Optional[SparseLatticeFunction] = None

    def out_of_budget() -> bool:
        if iterations >= budget:
            return True
        return seconds is not None and time.monotonic() - start >= seconds

    while not out_of_budget():
        points = _random_support(rng, support_size, box)
        values = rng.uniform(0.1, 1.0, size=support_size)
        current = _ratio(points, values, enumeration, p)
        iterations += 1
        step = 0.25
        while step > 1e-3 and not out_of_budget():
            improved = False
            for idx in range(support_size):
                for sign in (1.0, -1.0):
                    trial = values.copy()
                    trial[idx] = max(0.0, trial[idx] + sign * step)
                    value = _ratio(points, trial, enumeration, p)
                    iterations += 1
                    if value > current:
                        values, current, improved = trial, value, True
            if not improved:
                step /= 2
        if current > best_ratio:
            best_ratio = current
            best_witness = SparseLatticeFunction(2, dict(zip(points, values)))
            logger.debug("search %s p=%g: new best %.6f after %d evaluations", enumeration.name, p, current, iterations)
        if best_ratio > 1 + SEARCH_SUCCESS_MARGIN:
            break

    logger.info("search %s p=%g: best ratio %.6f in %d evaluations", enumeration.name, p, best_ratio, iterations)
    return SearchResult(enumeration.name, p, seed, iterations, best_ratio, best_witness)

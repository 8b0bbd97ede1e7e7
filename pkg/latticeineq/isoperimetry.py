"""
Vertex isoperimetry on Z^d.

sigma(n) = min |boundary(X)| over n-point sets X. The enumerated value is the
perimeter of the Wang-Wang prefix; the brute value enumerates every
king-connected set of n cells (Redelmeier's method) and takes the minimum.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Set

from labellings import Enumeration, WangWangEnumeration

from .config import BRUTE_ISO_CAP
from .errors import BUDGET, InequalityError, domain_error
from .lattice import Point, neighbors, vertex_boundary

logger = logging.getLogger(__name__)

ISO_MODES = ("enumerated", "brute")

_KING_STEPS = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)]


@dataclass
class PrefixStep:
    """Boundary of {v_1..v_n} after adding v_n."""
    n: int
    boundary_size: int
    max_boundary_label: int
    max_inside_neighbours: int


def prefix_walk(enumeration: Enumeration, n_max: int, with_labels: bool = True) -> Iterator[PrefixStep]:
    """
    Grow the prefix one label at a time, keeping its vertex boundary.

    max_inside_neighbours is the largest number of prefix neighbours of any
    boundary vertex at this step. Without labels max_boundary_label is 0.
    """
    inside: Set[Point] = set()
    inside_count: Dict[Point, int] = {}
    for n in range(1, n_max + 1):
        v = enumeration.point(n)
        inside.add(v)
        inside_count.pop(v, None)
        for y in neighbors(v):
            if y not in inside:
                inside_count[y] = inside_count.get(y, 0) + 1
        max_label = max(enumeration.label(y) for y in inside_count) if with_labels else 0
        yield PrefixStep(n, len(inside_count), max_label, max(inside_count.values()))


def prefix_boundary_sizes(enumeration: Enumeration, n_max: int) -> List[int]:
    """|boundary({v_1..v_n})| for n = 1..n_max."""
    sizes = []
    inside: Set[Point] = set()
    boundary: Set[Point] = set()
    for n in range(1, n_max + 1):
        v = enumeration.point(n)
        inside.add(v)
        boundary.discard(v)
        boundary.update(y for y in neighbors(v) if y not in inside)
        sizes.append(len(boundary))
    return sizes


def king_animals(n: int) -> Iterator[List[Point]]:
    """Every fixed king-connected n-cell set of Z^2, each once, anchored at its lowest-leftmost cell (0, 0)."""
    if n < 1:
        return

    def allowed(c: Point) -> bool:
        return c[1] > 0 or (c[1] == 0 and c[0] >= 0)

    origin = (0, 0)
    seen: Set[Point] = {origin}
    cells: List[Point] = []

    def grow(untried: List[Point]) -> Iterator[List[Point]]:
        untried = list(untried)
        while untried:
            cell = untried.pop()
            cells.append(cell)
            if len(cells) == n:
                yield list(cells)
            else:
                fresh = []
                for dx, dy in _KING_STEPS:
                    nb = (cell[0] + dx, cell[1] + dy)
                    if allowed(nb) and nb not in seen:
                        fresh.append(nb)
                seen.update(fresh)
                yield from grow(untried + fresh)
                seen.difference_update(fresh)
            cells.pop()

    yield from grow([origin])


def brute_iso_number(n: int) -> int:
    """Minimal vertex perimeter over king-connected n-sets of Z^2."""
    if n < 1:
        raise domain_error("n must be >= 1", n=n)
    if n > BRUTE_ISO_CAP:
        raise InequalityError(BUDGET, f"brute-force isoperimetry is capped at n = {BRUTE_ISO_CAP}", {"n": n})
    best = None
    count = 0
    for cells in king_animals(n):
        count += 1
        size = len(vertex_boundary(cells))
        if best is None or size < best:
            best = size
    logger.debug("brute isoperimetry n=%d: %d animals, minimum %d", n, count, best)
    return int(best)


def iso_number(n: int, d: int = 2, mode: str = "enumerated") -> int:
    """sigma(n) on Z^d; brute mode exists for d = 2 only."""
    if mode not in ISO_MODES:
        raise domain_error(f"Unknown mode: {mode}. Available: {list(ISO_MODES)}")
    if n < 1:
        raise domain_error("n must be >= 1", n=n)
    if mode == "brute":
        if d != 2:
            raise domain_error("brute-force isoperimetry is implemented for d = 2", d=d)
        return brute_iso_number(n)
    return prefix_boundary_sizes(WangWangEnumeration(d), n)[-1]


def iso_sequence(n_max: int, d: int = 2) -> List[int]:
    """sigma(1..n_max) from the Wang-Wang prefixes; exact in d = 2."""
    if n_max < 1:
        raise domain_error("n_max must be >= 1", n_max=n_max)
    return prefix_boundary_sizes(WangWangEnumeration(d), n_max)

"""
Nested isoperimetric minimisers of Z^d built by breadth-first search.

Labels are handed out when a vertex is discovered, so every prefix
{v_1, ..., v_n} has vertex boundary {v_{n+1}, ..., v_{n+b}} and every
prefix of size |B_r| is the closed l^1 ball of radius r.

In d = 2 the root scans N, E, W, S and every later vertex E, W, N, S:

            8
         7  2  6
     11  4  1  3  9
        12  5 10
           13
"""
from __future__ import annotations

from collections import deque
from typing import Iterator, List, Tuple

from .base import Enumeration, Point, l1_ball_size


def _unit_steps(dim: int) -> List[Tuple[int, ...]]:
    steps = []
    for j in range(dim):
        for sign in (1, -1):
            step = [0] * dim
            step[j] = sign
            steps.append(tuple(step))
    return steps


class WangWangEnumeration(Enumeration):
    """
    Breadth-first order from the origin; l^1-respecting in every dimension.

    In d = 2 this is the order of the greedy rule that always adds the boundary
    vertex least enlarging the boundary, ties going to the earlier label, so
    the prefix boundaries are the greedy ones.
    """

    def __init__(self, dim: int = 2):
        if dim < 2:
            raise ValueError(f"the Wang-Wang labelling needs d >= 2, got {dim}")
        super().__init__(dim)

    @property
    def name(self) -> str:
        return "wang_wang"

    def _scan_orders(self) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]]]:
        steps = _unit_steps(self.dim)
        if self.dim == 2:
            east, west, north, south = steps
            return [north, east, west, south], [east, west, north, south]
        return steps, steps

    def _generate(self) -> Iterator[Point]:
        root_order, order = self._scan_orders()
        origin = (0,) * self.dim
        seen = {origin}
        queue = deque([origin])
        yield origin
        first = True
        while queue:
            x = queue.popleft()
            for step in root_order if first else order:
                y = tuple(a + b for a, b in zip(x, step))
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
                    yield y
            first = False

    def label_bound(self, point: Point) -> int:
        return l1_ball_size(self.dim, sum(abs(c) for c in point))

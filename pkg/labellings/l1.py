"""
l^1-respecting labelling: spheres ||n||_1 = r in turn, lexicographic inside each.
"""
from __future__ import annotations

from typing import Iterator, List

from .base import Enumeration, Point, l1_ball_size


def l1_sphere(dim: int, radius: int) -> List[Point]:
    """Points of Z^dim with l^1 norm exactly radius, in lexicographic order."""
    if dim == 1:
        return sorted({(-radius,), (radius,)})
    out = []
    for head in range(-radius, radius + 1):
        for tail in l1_sphere(dim - 1, radius - abs(head)):
            out.append((head,) + tail)
    return out


class L1Enumeration(Enumeration):
    def __init__(self, dim: int = 2):
        super().__init__(dim)

    @property
    def name(self) -> str:
        return "l1"

    def _generate(self) -> Iterator[Point]:
        radius = 0
        while True:
            yield from l1_sphere(self.dim, radius)
            radius += 1

    def label_bound(self, point: Point) -> int:
        return l1_ball_size(self.dim, sum(abs(c) for c in point))

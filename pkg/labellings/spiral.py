"""
Square spiral labelling of Z^2.

    5 4 3        label 1 at the origin, then right 1, up 1, left 2, down 2,
    6 1 2        right 3, up 3, ... around the origin
    7 8 9 10
"""
from __future__ import annotations

from typing import Iterator

from .base import Enumeration, Point


class SpiralEnumeration(Enumeration):
    """Anticlockwise square spiral starting with a step to the right."""

    def __init__(self, dim: int = 2):
        if dim != 2:
            raise ValueError(f"the spiral labelling exists only for d = 2, got {dim}")
        super().__init__(dim)

    @property
    def name(self) -> str:
        return "spiral"

    def _generate(self) -> Iterator[Point]:
        x, y = 0, 0
        yield (x, y)
        step = 1
        while True:
            for (dx, dy), length in (((1, 0), step), ((0, 1), step), ((-1, 0), step + 1), ((0, -1), step + 1)):
                for _ in range(length):
                    x += dx
                    y += dy
                    yield (x, y)
            step += 2

    def label_bound(self, point: Point) -> int:
        # the square of side 2r+3 is closed once the walk leaves it
        r = max(abs(c) for c in point)
        return (2 * r + 3) ** 2

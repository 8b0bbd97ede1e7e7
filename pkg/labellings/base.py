"""
Base enumeration interface for latticeineq.

An enumeration is a bijection N -> Z^d, label 1 first. Points are generated
lazily and memoised together with the inverse map.
"""
from __future__ import annotations

import math
import threading
from abc import ABC, abstractmethod
from typing import Dict, Iterable, Iterator, List, Tuple

Point = Tuple[int, ...]


def l1_ball_size(dim: int, radius: int) -> int:
    """Number of points of Z^dim with l^1 norm <= radius."""
    if radius < 0:
        return 0
    return sum(2 ** k * math.comb(dim, k) * math.comb(radius, k) for k in range(min(dim, radius) + 1))


class Enumeration(ABC):
    """
    Abstract base class for labellings of Z^d.

    Subclasses supply:
    - the point stream, in label order
    - a bound on the label of a given point, so lookups know how far to generate

    Generation is append-only behind a lock.
    """

    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        self._dim = dim
        self._points: List[Point] = []
        self._labels: Dict[Point, int] = {}
        self._stream: Iterator[Point] = self._generate()
        self._lock = threading.Lock()

    @property
    def dim(self) -> int:
        return self._dim

    @property
    @abstractmethod
    def name(self) -> str:
        """Registry name of the labelling, e.g. "spiral"."""
        pass

    @abstractmethod
    def _generate(self) -> Iterator[Point]:
        """
        Yield every lattice point exactly once in label order.

        Returns:
            Infinite iterator of integer tuples of length dim
        """
        pass

    @abstractmethod
    def label_bound(self, point: Point) -> int:
        """
        Upper bound on the label of a point.

        Args:
            point: Lattice point of length dim

        Returns:
            An integer L such that the point is among the first L labels
        """
        pass

    # --- generation ---

    def _extend_to(self, count: int) -> None:
        if count <= len(self._points):
            return
        with self._lock:
            while len(self._points) < count:
                point = next(self._stream)
                self._labels[point] = len(self._points) + 1
                self._points.append(point)

    # --- lookups ---

    def point(self, i: int) -> Point:
        """The point carrying label i (1-based)."""
        if i < 1:
            raise ValueError(f"labels start at 1, got {i}")
        self._extend_to(i)
        return self._points[i - 1]

    def label(self, point: Iterable[int]) -> int:
        key = tuple(int(c) for c in point)
        if len(key) != self._dim:
            raise ValueError(f"point {key} does not have dimension {self._dim}")
        if key not in self._labels:
            self._extend_to(self.label_bound(key))
        return self._labels[key]

    def prefix(self, n: int) -> List[Point]:
        """The first n points, v_1 .. v_n."""
        if n < 0:
            raise ValueError(f"prefix length must be >= 0, got {n}")
        self._extend_to(n)
        return list(self._points[:n])

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self._dim}, generated={len(self._points)})"

"""
Discrete polar coordinates on Z^2 and the spectrum of the l^inf spheres.

A point n with r = ||n||_inf >= 1 gets the angle m = number of anticlockwise
rotation steps U from the corner (r, r); the sphere of radius r is an 8r-cycle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Tuple

import networkx as nx
import numpy as np

from .errors import domain_error
from .lattice import Point, as_point, norm_inf


@dataclass(frozen=True)
class PolarPoint2D:
    r: int
    m: int

    def __post_init__(self):
        if self.r < 0:
            raise domain_error("radius must be >= 0", r=self.r)
        if self.r == 0 and self.m != 0:
            raise domain_error("the origin has angle 0", m=self.m)
        if self.r > 0 and not 0 <= self.m < 8 * self.r:
            raise domain_error(f"angle must lie in [0, {8 * self.r - 1}]", r=self.r, m=self.m)


def rotate(n: Point) -> Point:
    """The anticlockwise step U along the sphere ||n||_inf = r."""
    n1, n2 = as_point(n)
    r = norm_inf((n1, n2))
    if r == 0:
        return (0, 0)
    if n2 == r and -r < n1 <= r:
        return (n1 - 1, n2)
    if n1 == -r and -r < n2 <= r:
        return (n1, n2 - 1)
    if n2 == -r and -r <= n1 < r:
        return (n1 + 1, n2)
    return (n1, n2 + 1)


def polar_coords_2d(n: Point) -> PolarPoint2D:
    n1, n2 = as_point(n)
    r = max(abs(n1), abs(n2))
    if r == 0:
        return PolarPoint2D(0, 0)
    if n2 == r and n1 > -r:
        m = r - n1
    elif n1 == -r and n2 > -r:
        m = 3 * r - n2
    elif n2 == -r and n1 < r:
        m = 5 * r + n1
    else:
        m = 7 * r + n2
    return PolarPoint2D(r, m)


def from_polar_2d(p: PolarPoint2D) -> Point:
    r, m = p.r, p.m
    if r == 0:
        return (0, 0)
    side, offset = divmod(m, 2 * r)
    if side == 0:
        return (r - offset, r)
    if side == 1:
        return (-r, r - offset)
    if side == 2:
        return (-r + offset, -r)
    return (r, -r + offset)


@dataclass
class SphereSpectrum:
    """Eigenvalues 4 sin^2(pi l / 8r) of the 8r-cycle and the sine eigenbasis residual."""
    r: int
    eigenvalues: List[Tuple[int, float, int]] = field(default_factory=list)  # (l, lambda, multiplicity)
    max_residual: float = 0.0

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, _, mult in self.eigenvalues)


def sphere_graph(r: int) -> nx.Graph:
    """Angles 0..8r-1 with m1 ~ m2 iff |m1 - m2| is 1 or 8r - 1."""
    if r < 1:
        raise domain_error("radius must be >= 1", r=r)
    return nx.cycle_graph(8 * r)


def sphere_eigenvalue(r: int, l: int) -> float:
    return 4 * math.sin(math.pi * l / (8 * r)) ** 2


def sphere_spectrum(r: int) -> SphereSpectrum:
    """Eigenpairs of the sphere graph; the residual is over the sine basis l = 1..4r-1."""
    graph = sphere_graph(r)
    lap = nx.laplacian_matrix(graph, nodelist=range(8 * r)).astype(float)
    size = 8 * r
    m = np.arange(size)

    eigenvalues = []
    for l in range(0, 4 * r + 1):
        mult = 1 if l in (0, 4 * r) else 2
        eigenvalues.append((l, sphere_eigenvalue(r, l), mult))

    worst = 0.0
    for l in range(1, 4 * r):
        phi = math.sqrt(1.0 / (4 * r)) * np.sin(2 * np.pi * m * l / size)
        residual = lap @ phi - sphere_eigenvalue(r, l) * phi
        worst = max(worst, float(np.linalg.norm(residual)))
    return SphereSpectrum(r=r, eigenvalues=eigenvalues, max_residual=worst)

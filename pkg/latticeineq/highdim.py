"""
Hardy and Rellich quotients on Z^d, d >= 2.

    sum |D Delta^k u|^2 >= C1(k, d) sum |u|^2 / |n|^(4k+2)
    sum |Delta^k u|^2   >= C2(k, d) sum |u|^2 / |n|^(4k)

The torus constants give lower bounds for C1 and C2, test functions give the
upper ones. In d = 2 no Hardy constant exists at all, which the plateau family
shows.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from scipy import linalg, sparse

from .config import DENSE_EIGEN_POINTS
from .constants import explicit_constant, hardy_constant, hardy_rellich_constant, rellich_constant
from .errors import BUDGET, InequalityError, domain_error
from .lattice import (
    SparseLatticeFunction,
    backward_difference,
    laplacian_power,
    norm_inf,
    norm_sq,
    require_zero_at_origin,
    sq_mass,
)
from .reports import QuotientReport

logger = logging.getLogger(__name__)

OPERATORS = ("grad_laplacian", "laplacian")


def _lower_bound(operator: str, k: int, d: int) -> Optional[float]:
    name = "C1_lower" if operator == "grad_laplacian" else "C2_lower"
    try:
        return explicit_constant(name, k, d)
    except InequalityError:
        return None


def hardy_quotient_nd(u: SparseLatticeFunction, k: int = 0, operator: str = "grad_laplacian") -> QuotientReport:
    """
    Both sides of the order-k inequality for u with u(0) = 0.

    The report's constant is the torus-derived lower bound (0 where none is
    available for this d); the matching test-function upper bound goes in the notes.
    """
    if operator not in OPERATORS:
        raise domain_error(f"Unknown operator: {operator}. Available: {list(OPERATORS)}")
    if k < 0:
        raise domain_error("k must be >= 0", k=k)
    require_zero_at_origin(u)
    if u.is_zero():
        raise domain_error("u vanishes identically")
    d = u.dim

    lap = laplacian_power(u, k)
    if operator == "grad_laplacian":
        lhs = sum(sq_mass(backward_difference(lap, j)) for j in range(d))
        power = 2 * k + 1
        upper = explicit_constant("C1_upper", k, d)
    else:
        lhs = sq_mass(lap)
        power = 2 * k
        upper = explicit_constant("C2_upper", k, d)
    rhs = sum(abs(v) ** 2 / norm_sq(n) ** power for n, v in u.items())

    lower = _lower_bound(operator, k, d)
    notes = [f"upper bound {upper:.6g}"]
    if lower is None:
        notes.append(f"no lower bound available for d={d}, k={k}")
    return QuotientReport.build(f"hardy_nd_{operator}", lhs, rhs, lower or 0.0, notes=notes)


def indicator_unit_sphere(d: int) -> SparseLatticeFunction:
    """1 on the 2d points with |n| = 1."""
    if d < 1:
        raise domain_error("d must be >= 1", d=d)
    values = {}
    for j in range(d):
        for sign in (1, -1):
            point = [0] * d
            point[j] = sign
            values[tuple(point)] = 1.0
    return SparseLatticeFunction(d, values)


@dataclass
class ConstantBracket:
    """Numeric bracket lower <= C1(0, d) <= upper with the test-function ratio in between."""
    d: int
    lower: float
    test_ratio: float
    upper: float

    @property
    def consistent(self) -> bool:
        return self.lower <= self.test_ratio <= self.upper


def hardy_constant_bracket(d: int) -> ConstantBracket:
    if d < 3:
        raise domain_error("the Hardy constant exists only for d >= 3", d=d)
    report = hardy_quotient_nd(indicator_unit_sphere(d))
    return ConstantBracket(
        d=d,
        lower=explicit_constant("C1_lower", 0, d),
        test_ratio=report.ratio,
        upper=explicit_constant("C1_upper", 0, d),
    )


def constant_scaling(d_values: List[int]) -> List[Dict[str, float]]:
    """H(0,d)/d, HR(0,d)/d and R(0,d)/d^2 along a sweep of dimensions."""
    rows = []
    for d in d_values:
        row: Dict[str, float] = {"d": d}
        row["H_over_d"] = hardy_constant(0, d) / d if d > 2 else math.nan
        row["HR_over_d"] = hardy_rellich_constant(0, d) / d if d >= 8 else math.nan
        row["R_over_d2"] = rellich_constant(0, d) / d ** 2 if d > 4 else math.nan
        rows.append(row)
    return rows


# -------------------------
# d = 2 FAILURE
# -------------------------

def plateau_profile(N: int, r: int) -> float:
    """1 on 1 <= r <= N, 2 - r/N on N < r < 2N, 0 otherwise."""
    if r == 0 or r >= 2 * N:
        return 0.0
    if r <= N:
        return 1.0
    return 2.0 - r / N


def plateau_function(N: int) -> SparseLatticeFunction:
    """The l^inf-radial plateau u_N on Z^2; materialises (4N-1)^2 points."""
    if N < 1:
        raise domain_error("N must be >= 1", N=N)
    values = {}
    for a in range(-2 * N, 2 * N + 1):
        for b in range(-2 * N, 2 * N + 1):
            value = plateau_profile(N, norm_inf((a, b)))
            if value:
                values[(a, b)] = value
    return SparseLatticeFunction(2, values)


def ring_inverse_sq_sum(r: int) -> float:
    """sum over ||n||_inf = r of 1/|n|^2 = 4 (sum_{|t|<=r} 1/(r^2+t^2) - 1/(2r^2))."""
    t = np.arange(-r, r + 1, dtype=float)
    return float(4 * (np.sum(1.0 / (r * r + t * t)) - 1.0 / (2 * r * r)))


@dataclass
class PlateauReport:
    N: int
    energy: float
    mass: float

    @property
    def ratio(self) -> float:
        """sum |u|^2/|n|^2 over sum |grad u|^2; unbounded in N."""
        return self.mass / self.energy


def plateau_ratio(N: int) -> PlateauReport:
    """
    Energy and weighted mass of u_N from ring sums.

    The energy is 4 (origin edges) + sum_{r=N}^{2N-1} 4(2r+1)/N^2 = 16 for every N.
    """
    if N < 1:
        raise domain_error("N must be >= 1", N=N)
    energy = 4.0 + sum(4 * (2 * r + 1) for r in range(N, 2 * N)) / N ** 2
    mass = sum(plateau_profile(N, r) ** 2 * ring_inverse_sq_sum(r) for r in range(1, 2 * N))
    return PlateauReport(N, energy, mass)


# -------------------------
# RAYLEIGH ESTIMATE
# -------------------------

def _dirichlet_laplacian(size: int, d: int) -> sparse.csr_matrix:
    """Kronecker sum of the 1-D (2, -1) stencil; zero outside the box."""
    v = np.ones(size)
    lap1 = sparse.spdiags([-v, 2 * v, -v], [-1, 0, 1], size, size)
    eye = sparse.identity(size)
    total = None
    for axis in range(d):
        term = None
        for j in range(d):
            factor = lap1 if j == axis else eye
            term = factor if term is None else sparse.kron(term, factor)
        total = term if total is None else total + term
    return sparse.csr_matrix(total)


@dataclass
class RayleighEstimate:
    d: int
    radius: int
    value: float
    notes: List[str] = field(default_factory=list)


def hardy_rayleigh_box(d: int, radius: int) -> RayleighEstimate:
    """
    Smallest generalised eigenvalue of (sum |Du|^2, sum |u|^2/|n|^2) over
    functions supported in [-radius, radius]^d with u(0) = 0: an upper bracket
    for the sharp Hardy constant that decreases as the box grows.
    """
    if d < 1 or radius < 1:
        raise domain_error("need d >= 1 and radius >= 1", d=d, radius=radius)
    size = 2 * radius + 1
    if size ** d > DENSE_EIGEN_POINTS:
        raise InequalityError(BUDGET, "box too large for a dense eigensolve", {"points": size ** d})
    lap = _dirichlet_laplacian(size, d).toarray()
    coords = np.indices((size,) * d).reshape(d, -1).T - radius
    r2 = np.sum(coords ** 2, axis=1)
    keep = r2 > 0
    a = lap[np.ix_(keep, keep)]
    b = np.diag(1.0 / r2[keep])
    value = float(linalg.eigh(a, b, eigvals_only=True, subset_by_index=[0, 0])[0])
    logger.debug("Rayleigh estimate d=%d radius=%d: %.6f", d, radius, value)
    notes = []
    if d >= 3:
        notes.append(f"torus lower bound {explicit_constant('C1_lower', 0, d):.6g}")
    return RayleighEstimate(d, radius, value, notes)

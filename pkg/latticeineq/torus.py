"""
Lattice <-> torus correspondence and the torus Hardy-type inequalities.

- TorusGridFunction: samples on the midpoint grid of (-pi, pi)^d
- lattice_to_torus_psi: the zero-average psi whose Fourier coefficients are
  u(n) divided by a power of |n|^2
- torus_identity_check: the two Parseval identities of each parity, evaluated
  with exact quadrature
- torus_inequality_check: weighted Hardy / Hardy-Rellich / Rellich, their
  iterates and the antisymmetric inequalities, with Richardson extrapolation
  over grid doublings for the singular omega^(-j) weights
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from .antisym import antisym_torus_constant, antisymmetrize, cp_constant, minimal_distinct_vector
from .config import INEQUALITY_SLACK, MAX_DOUBLINGS, MAX_GRID_POINTS, QUADRATURE_TOL, RICHARDSON_TOL
from .constants import (
    hardy_constant,
    hardy_rellich_constant,
    iterated_hardy_constant,
    iterated_rellich_constant,
    rellich_constant,
)
from .errors import BUDGET, InequalityError, domain_error, precondition_error
from .lattice import SparseLatticeFunction, backward_difference, laplacian_power, norm_sq, require_zero_at_origin
from .reports import QuotientReport
from .trig import TrigPolynomial, midpoint_mesh, quadrature_grid_size

logger = logging.getLogger(__name__)

TORUS_INEQUALITIES = (
    "hardy",
    "weighted_hardy",
    "hardy_rellich",
    "weighted_hardy_rellich",
    "weighted_rellich",
    "iterated_rellich",
    "iterated_hardy",
    "antisymmetric_poincare",
    "antisymmetric_hardy",
)

PARITIES = ("odd", "even")


# -------------------------
# GRID FUNCTIONS
# -------------------------

@dataclass
class TorusGridFunction:
    """
    Complex samples of a function on (-pi, pi)^d at the midpoints
    x_j = -pi + (j + 1/2) 2pi / size along every axis.

    source is the trigonometric polynomial the samples came from, when known;
    it is what allows resampling on a finer grid.
    """
    dim: int
    size: int
    samples: np.ndarray
    source: Optional[TrigPolynomial] = None

    def __post_init__(self):
        if self.size < 2 or self.size % 2:
            raise domain_error("grid size must be even and >= 2", size=self.size)
        if self.samples.shape != (self.size,) * self.dim:
            raise domain_error(
                f"samples have shape {self.samples.shape}, expected {(self.size,) * self.dim}"
            )

    @classmethod
    def from_trig(cls, p: TrigPolynomial, size: Optional[int] = None) -> "TorusGridFunction":
        if size is None:
            size = quadrature_grid_size(p.bandwidth())
        mesh = midpoint_mesh(size, p.dim)
        return cls(p.dim, size, np.asarray(p.evaluate(*mesh)), p)

    @classmethod
    def omega(cls, dim: int, size: int) -> "TorusGridFunction":
        """omega(x) = sum_j sin^2(x_j / 2); strictly positive on every midpoint grid."""
        mesh = midpoint_mesh(size, dim)
        return cls(dim, size, sum(np.sin(x / 2) ** 2 for x in mesh).astype(complex))

    @property
    def cell(self) -> float:
        return (2 * math.pi / self.size) ** self.dim

    def integral(self) -> complex:
        return complex(np.sum(self.samples) * self.cell)

    def resample(self, size: int) -> "TorusGridFunction":
        if self.source is None:
            raise precondition_error("resampling needs the source polynomial")
        return TorusGridFunction.from_trig(self.source, size)


# -------------------------
# PSI CONSTRUCTION
# -------------------------

def _require_parity(parity: str) -> None:
    if parity not in PARITIES:
        raise domain_error(f"Unknown parity: {parity}. Available: {list(PARITIES)}")


def lattice_to_torus_psi(u: SparseLatticeFunction, k: int, parity: str = "odd") -> TorusGridFunction:
    """
    psi(x) = (2pi)^(-d/2) sum_n a(n) exp(-i n.x) with

        a(n) = i^(2k+1) u(n) / |n|^(4k+2)   (odd)
        a(n) = u(n) / |n|^(4k)              (even)

    u(0) = 0 is required, so psi has zero average.
    """
    _require_parity(parity)
    if k < 0:
        raise domain_error("k must be >= 0", k=k)
    require_zero_at_origin(u)
    norm = (2 * math.pi) ** (-u.dim / 2)
    coeffs = {}
    for n, v in u.items():
        r2 = norm_sq(n)
        if parity == "odd":
            a = (1j ** (2 * k + 1)) * v / r2 ** (2 * k + 1)
        else:
            a = v / r2 ** (2 * k)
        coeffs[tuple(-c for c in n)] = a * norm
    return TorusGridFunction.from_trig(TrigPolynomial(u.dim, coeffs))


def _gradient(p: TrigPolynomial) -> List[TrigPolynomial]:
    return [p.derivative(j) for j in range(p.dim)]


def _laplacian_power(p: TrigPolynomial, m: int) -> TrigPolynomial:
    out = p
    for _ in range(m):
        out = out.laplacian()
    return out


def _sq_samples(parts: List[TrigPolynomial], mesh: Tuple[np.ndarray, ...]) -> np.ndarray:
    return sum(np.abs(p.evaluate(*mesh)) ** 2 for p in parts)


def _omega_samples(mesh: Tuple[np.ndarray, ...]) -> np.ndarray:
    return sum(np.sin(x / 2) ** 2 for x in mesh)


@dataclass
class TorusIdentityReport:
    name: str
    lattice_side: float
    torus_side: float
    residual: float
    holds: bool


def _identity(name: str, lattice_side: float, torus_side: float) -> TorusIdentityReport:
    residual = abs(lattice_side - torus_side) / max(1.0, abs(lattice_side))
    return TorusIdentityReport(name, lattice_side, torus_side, residual, residual <= QUADRATURE_TOL)


def torus_identity_check(u: SparseLatticeFunction, k: int, parity: str = "odd") -> List[TorusIdentityReport]:
    """
    The two identities linking u and psi = lattice_to_torus_psi(u, k, parity).

    odd:   sum |u|^2 / |n|^(4k+2) = int |grad Delta^k psi|^2
           sum |D Delta^k u|^2    = 4^(2k+1) int |Delta^(2k+1) psi|^2 omega^(2k+1)
    even:  sum |u|^2 / |n|^(4k)   = int |Delta^k psi|^2
           sum |Delta^k u|^2      = 4^(2k) int |Delta^(2k) psi|^2 omega^(2k)

    Every integrand is a trigonometric polynomial, so one midpoint grid above
    its bandwidth integrates it exactly.
    """
    psi = lattice_to_torus_psi(u, k, parity).source
    assert psi is not None
    power = 2 * k + 1 if parity == "odd" else 2 * k
    size = quadrature_grid_size(2 * psi.bandwidth() + power)
    mesh = midpoint_mesh(size, u.dim)
    cell = (2 * math.pi / size) ** u.dim
    omega = _omega_samples(mesh)

    lap_u = laplacian_power(u, k)
    if parity == "odd":
        weighted = sum(abs(v) ** 2 / norm_sq(n) ** (2 * k + 1) for n, v in u.items())
        smooth = _sq_samples(_gradient(_laplacian_power(psi, k)), mesh)
        energy = sum(
            abs(v) ** 2 for j in range(u.dim) for _, v in backward_difference(lap_u, j).items()
        )
    else:
        weighted = sum(abs(v) ** 2 / norm_sq(n) ** (2 * k) for n, v in u.items())
        smooth = _sq_samples([_laplacian_power(psi, k)], mesh)
        energy = sum(abs(v) ** 2 for _, v in lap_u.items())
    top = _sq_samples([_laplacian_power(psi, power)], mesh)

    reports = [
        _identity(f"{parity}_inverse_weight", float(weighted), float(np.sum(smooth) * cell)),
        _identity(
            f"{parity}_operator",
            float(energy),
            float(4.0 ** power * np.sum(top * omega ** power) * cell),
        ),
    ]
    logger.debug("torus identities for k=%d parity=%s: %s", k, parity, [r.residual for r in reports])
    return reports


# -------------------------
# TORUS INEQUALITIES
# -------------------------

@dataclass
class GridIntegral:
    """A midpoint integral with its extrapolation error estimate."""
    value: float
    error: float
    size: int
    converged: bool
    history: List[Tuple[int, float]] = field(default_factory=list)


def singular_error_order(dim: int, power: int) -> int:
    """
    Leading midpoint error order h^p for an omega^power weight, power < 0.

    The singular terms go like h^(d + 2 power + 2j); the first positive one
    leads for any integrable integrand.
    """
    order = dim + 2 * power
    while order <= 0:
        order += 2
    return order


def _richardson_row(previous: List[float], value: float, order: int) -> List[float]:
    """Next row of the extrapolation table, removing h^order, h^(order+2), ..."""
    row = [value]
    for j, coarse in enumerate(previous):
        factor = 2.0 ** (order + 2 * j) - 1.0
        row.append(row[j] + (row[j] - coarse) / factor)
    return row


def grid_integral(
    integrand: Callable[[Tuple[np.ndarray, ...]], np.ndarray],
    dim: int,
    start_size: int,
    singular: bool,
    tol: float = RICHARDSON_TOL,
    order: int = 2,
) -> GridIntegral:
    """
    Midpoint integral of integrand(mesh) over (-pi, pi)^d.

    Smooth integrands are integrated once (exact at start_size). Singular ones
    are doubled and Richardson-extrapolated with error orders order, order + 2,
    ... until successive diagonal entries agree to tol or the grid budget runs
    out; that difference is reported as the error.
    """
    def at(size: int) -> float:
        mesh = midpoint_mesh(size, dim)
        return float(np.sum(integrand(mesh)) * (2 * math.pi / size) ** dim)

    size = start_size
    row = [at(size)]
    history = [(size, row[0])]
    if not singular:
        return GridIntegral(row[0], 0.0, size, True, history)

    if (2 * size) ** dim > MAX_GRID_POINTS:
        raise InequalityError(BUDGET, f"no room to double a {size}^{dim} grid", {"size": size, "dim": dim})
    error = math.inf
    for _ in range(MAX_DOUBLINGS):
        if (2 * size) ** dim > MAX_GRID_POINTS:
            break
        size *= 2
        finer = at(size)
        history.append((size, finer))
        previous, row = row, _richardson_row(row, finer, order)
        error = abs(row[-1] - previous[-1])
        if error <= tol * max(1.0, abs(row[-1])):
            return GridIntegral(row[-1], error, size, True, history)
    logger.debug("grid extrapolation stopped at size %d with error %.3e", size, error)
    return GridIntegral(row[-1], error, size, False, history)


def is_zero_average(psi: TrigPolynomial, tol: float = QUADRATURE_TOL) -> bool:
    scale = max(1.0, math.sqrt(sum(abs(c) ** 2 for _, c in psi.items())))
    return abs(psi.coefficient((0,) * psi.dim)) <= tol * scale


def trig_is_antisymmetric(psi: TrigPolynomial, tol: float = 1e-12) -> bool:
    """Coefficients flip sign under every transposition of frequency coordinates."""
    for q, c in psi.items():
        for i in range(psi.dim):
            for j in range(i + 1, psi.dim):
                swapped = list(q)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                if abs(psi.coefficient(swapped) + c) > tol:
                    return False
    return True


def antisymmetric_extremal(d: int) -> TrigPolynomial:
    """Fourier image of the antisymmetrized delta at a minimal distinct-coordinate vector."""
    u = antisymmetrize(SparseLatticeFunction.delta(minimal_distinct_vector(d)))
    norm = (2 * math.pi) ** (-d / 2)
    return TrigPolynomial(d, {tuple(-c for c in n): v * norm for n, v in u.items()})


def _inequality_parts(name: str, psi: TrigPolynomial, k: int, m: int):
    """(constant, larger-side factors, larger-side omega power, smaller-side factors, smaller-side omega power)."""
    d = psi.dim
    if name in ("hardy", "weighted_hardy"):
        kk = 0 if name == "hardy" else k
        return hardy_constant(kk, d), _gradient(psi), kk, [psi], kk - 1
    if name in ("hardy_rellich", "weighted_hardy_rellich"):
        kk = 0 if name == "hardy_rellich" else k
        return hardy_rellich_constant(kk, d), [psi.laplacian()], kk, _gradient(psi), kk - 1
    if name == "weighted_rellich":
        return rellich_constant(k, d), [psi.laplacian()], k, [psi], k - 2
    if name == "iterated_rellich":
        return iterated_rellich_constant(m, k, d), [_laplacian_power(psi, m)], k, [psi], k - 2 * m
    if name == "iterated_hardy":
        return (
            iterated_hardy_constant(m, k, d),
            _gradient(_laplacian_power(psi, m)),
            k,
            [psi],
            k - 2 * m - 1,
        )
    if name == "antisymmetric_poincare":
        return float(cp_constant(d)), _gradient(psi), 0, [psi], 0
    if name == "antisymmetric_hardy":
        return antisym_torus_constant(d), _gradient(psi), 0, [psi], -1
    raise domain_error(f"Unknown torus inequality: {name}. Available: {list(TORUS_INEQUALITIES)}")


def torus_inequality_check(
    name: str,
    psi: Union[TrigPolynomial, TorusGridFunction],
    k: int = 0,
    m: int = 1,
) -> QuotientReport:
    """
    constant * int |psi-side|^2 omega^(j) <= int |operator psi|^2 omega^(k), k <= 0.

    psi must have zero average; the antisymmetric inequalities also need
    antisymmetric psi. Negative omega powers are singular at x = 0, which the
    even midpoint grids never sample, and are handled by Richardson
    extrapolation over grid doublings: the comparison allows for the reported
    errors of both sides. A side that does not converge makes the check
    inconclusive, reported as holds = False.
    """
    if isinstance(psi, TorusGridFunction):
        if psi.source is None:
            raise precondition_error("psi must carry its trigonometric polynomial")
        psi = psi.source
    if not psi.has_integer_frequencies():
        raise precondition_error("psi must be 2pi-periodic (integer frequencies)")
    if psi.is_zero():
        raise domain_error("psi vanishes identically")
    if not is_zero_average(psi):
        raise precondition_error("psi must have zero average")
    if name.startswith("antisymmetric") and not trig_is_antisymmetric(psi):
        raise precondition_error("psi is not antisymmetric")
    if k > 0:
        raise domain_error("k must be <= 0", k=k)

    constant, big_parts, big_power, small_parts, small_power = _inequality_parts(name, psi, k, m)
    start = quadrature_grid_size(2 * psi.bandwidth() + max(abs(big_power), abs(small_power)))

    def weighted(parts: List[TrigPolynomial], power: int):
        return lambda mesh: _sq_samples(parts, mesh) * _omega_samples(mesh) ** power

    def integral(parts: List[TrigPolynomial], power: int) -> GridIntegral:
        if power >= 0:
            return grid_integral(weighted(parts, power), psi.dim, start, singular=False)
        order = singular_error_order(psi.dim, power)
        return grid_integral(weighted(parts, power), psi.dim, start, singular=True, order=order)

    big = integral(big_parts, big_power)
    small = integral(small_parts, small_power)

    bound = constant * small.value
    allowance = constant * small.error + big.error + INEQUALITY_SLACK * max(1.0, abs(bound))
    notes = [
        f"grid {small.size}^{psi.dim}, extrapolation error lhs={big.error:.3e} rhs={small.error:.3e}",
    ]
    converged = big.converged and small.converged
    if not converged:
        notes.append(f"inconclusive: extrapolation did not reach {RICHARDSON_TOL:g}")
    ratio = big.value / small.value if small.value > 0 else math.inf
    return QuotientReport(
        name=f"torus_{name}",
        lhs=big.value,
        rhs_sum=small.value,
        ratio=ratio,
        constant=constant,
        holds=converged and big.value >= bound - allowance,
        notes=notes,
    )


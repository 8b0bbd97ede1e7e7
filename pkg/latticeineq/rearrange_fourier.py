"""
Fourier rearrangement u# = F^{-1}((F u)*) on Z and Z^d, and the
symmetric-decreasing rearrangement u* built from it.

Everything is done at sample level on the even midpoint grid of (-pi, pi)^d:
|F u| is sampled, the samples are rearranged (an even symmetric-decreasing
pass on Z, one pass per axis on Z^d) and transformed back exactly by the
discrete inverse. Each pass keeps the sum of squares, so l^2 is preserved up
to rounding for every grid size.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from scipy import integrate

from .config import DEFAULT_SEED, FOURIER_GRID, INEQUALITY_SLACK, OUTPUT_THRESHOLD
from .errors import domain_error
from .hardy_fourier import fourier_transform
from .lattice import SparseLatticeFunction
from .rearrange_axis import decreasing_rearrange
from .reports import QuotientReport
from .trig import midpoint_mesh

logger = logging.getLogger(__name__)

FOURIER_OPERATORS = ("laplacian", "grad_laplacian")


@dataclass
class SampledCircleFunction:
    """Non-negative samples at the midpoints of (-pi, pi); size is even."""
    size: int
    samples: np.ndarray

    def __post_init__(self):
        if self.size < 2 or self.size % 2:
            raise domain_error("grid size must be even and >= 2", size=self.size)
        if self.samples.shape != (self.size,):
            raise domain_error(f"expected {self.size} samples, got {self.samples.shape}")

    def rearranged(self) -> "SampledCircleFunction":
        return SampledCircleFunction(self.size, symmetric_decreasing_samples(self.samples))


def symmetric_order(size: int) -> np.ndarray:
    """Midpoint indices by |x| ascending, -x before +x."""
    half = size // 2
    order = np.empty(size, dtype=int)
    order[0::2] = np.arange(half - 1, -1, -1)
    order[1::2] = np.arange(half, size)
    return order


def symmetric_decreasing_samples(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """Largest sample nearest x = 0 along `axis`, then alternating -x, +x outward."""
    values = np.asarray(values)
    size = values.shape[axis]
    sorted_desc = -np.sort(-values, axis=axis)
    out = np.empty_like(values)
    index = [slice(None)] * values.ndim
    index[axis] = symmetric_order(size)
    out[tuple(index)] = sorted_desc
    return out


def even_decreasing_samples(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """
    Symmetric-decreasing samples that are exactly even along `axis`.

    Sorted samples go in pairs (s_0, s_1), (s_2, s_3), ... to the midpoints
    -x_j, +x_j at the pair's root mean square, so the sum of squares is kept.
    """
    moved = np.moveaxis(np.asarray(values, dtype=float), axis, -1)
    half = moved.shape[-1] // 2
    sorted_desc = -np.sort(-moved, axis=-1)
    paired = np.sqrt(0.5 * (sorted_desc[..., 0::2] ** 2 + sorted_desc[..., 1::2] ** 2))
    out = np.empty_like(moved)
    out[..., half:] = paired
    out[..., :half] = paired[..., ::-1]
    return np.moveaxis(out, -1, axis)


def steiner_samples(values: np.ndarray) -> np.ndarray:
    """Even symmetric-decreasing passes along e_1, ..., e_d."""
    out = np.asarray(values, dtype=float)
    for axis in range(out.ndim):
        out = even_decreasing_samples(out, axis=axis)
    return out


def multiplier_monotonicity(f: np.ndarray, g: np.ndarray) -> Tuple[float, float]:
    """
    (sum f g, sum f* g) for non-negative samples f and a weight g that grows
    with |x|; the first is never smaller.
    """
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    if np.any(f < 0):
        raise domain_error("samples must be non-negative")
    return float(np.sum(f * g)), float(np.sum(symmetric_decreasing_samples(f) * g))


def _check_grid(u: SparseLatticeFunction, size: int) -> None:
    if size < 2 or size % 2:
        raise domain_error("grid size must be even and >= 2", size=size)
    width = max((max(abs(c) for c in n) for n, _ in u.items()), default=0)
    if size < 4 * max(width, 1):
        raise domain_error(f"grid size {size} is too small for support width {width}", size=size, width=width)


def sample_modulus(u: SparseLatticeFunction, size: int) -> np.ndarray:
    """|F u| on the size^d midpoint grid."""
    _check_grid(u, size)
    mesh = midpoint_mesh(size, u.dim)
    return np.abs(fourier_transform(u).evaluate(*mesh))


def inverse_samples(samples: np.ndarray) -> np.ndarray:
    """
    c(n) = (2pi)^(-d/2) (2pi/M)^d sum_x f(x) exp(i n.x) for n in [-M/2, M/2)^d,
    returned with index n + M/2 along every axis.
    """
    size = samples.shape[0]
    dim = samples.ndim
    h = 2 * math.pi / size
    raw = np.fft.ifftn(samples) * (2 * math.pi) ** (dim / 2)
    freqs = np.fft.fftfreq(size, d=1.0 / size)
    phase = np.exp(1j * freqs * (h / 2 - math.pi))
    for axis in range(dim):
        shape = [1] * dim
        shape[axis] = size
        raw = raw * phase.reshape(shape)
    return np.fft.fftshift(raw)


@dataclass
class FourierRearrangement:
    """u# with its truncation bookkeeping."""
    function: SparseLatticeFunction
    size: int
    norm_sq: float
    dropped_mass: float
    imag_mass: float
    samples: np.ndarray = field(repr=False, default_factory=lambda: np.zeros(0))


def _to_function(coeffs: np.ndarray, dim: int, threshold: float) -> Tuple[SparseLatticeFunction, float]:
    half = coeffs.shape[0] // 2
    values = {}
    dropped = 0.0
    for index in np.ndindex(coeffs.shape):
        c = complex(coeffs[index])
        if abs(c) <= threshold:
            dropped += abs(c) ** 2
            continue
        values[tuple(i - half for i in index)] = c
    return SparseLatticeFunction(dim, values), dropped


def fourier_rearrangement(
    u: SparseLatticeFunction,
    size: int = FOURIER_GRID,
    threshold: float = OUTPUT_THRESHOLD,
) -> FourierRearrangement:
    """
    Steiner-symmetrize |F u| along e_1, ..., e_d and invert on the grid.

    Every pass leaves the samples even along its axis and keeps the evenness
    of the earlier axes, so u# is real and u#(.., n_i, ..) = u#(.., -n_i, ..)
    for every i up to rounding.
    """
    if u.is_zero():
        raise domain_error("u vanishes identically")
    samples = steiner_samples(sample_modulus(u, size))
    coeffs = inverse_samples(samples)
    function, dropped = _to_function(coeffs, u.dim, threshold)
    norm_sq = float(np.sum(np.abs(coeffs) ** 2))
    imag_mass = float(np.sum(coeffs.imag ** 2))
    return FourierRearrangement(function, size, norm_sq, dropped, imag_mass, samples)


def fourier_rearrange_1d(u: SparseLatticeFunction, size: int = FOURIER_GRID) -> SparseLatticeFunction:
    if u.dim != 1:
        raise domain_error("expected a function on Z (dim 1)", dim=u.dim)
    return fourier_rearrangement(u, size).function


def fourier_rearrange_nd(u: SparseLatticeFunction, size: int) -> SparseLatticeFunction:
    return fourier_rearrangement(u, size).function


def beta_closed_form(beta: float, n: int) -> float:
    """u# of u = beta (delta_0 + delta_1): (4|beta|/pi)(-1)^n / (1 - 4n^2)."""
    return 4 * abs(beta) / math.pi * (-1) ** n / (1 - 4 * n * n)


def rearrangement_error(u: SparseLatticeFunction, size: int, window: int = 16) -> float:
    """epsilon(size): max |u#_size(n) - u#_2size(n)| over |n_j| <= window."""
    coarse = fourier_rearrangement(u, size).function
    fine = fourier_rearrangement(u, 2 * size).function
    points = {n for n, _ in coarse.items()} | {n for n, _ in fine.items()}
    points = {n for n in points if max(abs(c) for c in n) <= window}
    return max((abs(coarse.get(n) - fine.get(n)) for n in points), default=0.0)


# -------------------------
# POLYA-SZEGO
# -------------------------

def _multiplier(size: int, dim: int, power: int) -> np.ndarray:
    mesh = midpoint_mesh(size, dim)
    return (4 * sum(np.sin(x / 2) ** 2 for x in mesh)) ** power


def ps_fourier_check(
    u: SparseLatticeFunction,
    k: int = 0,
    operator: str = "grad_laplacian",
    size: int = 256,
) -> QuotientReport:
    """
    ||Delta^k u||_2 >= ||Delta^k u#||_2 and ||D Delta^k u||_2 >= ||D Delta^k u#||_2,
    compared on the multiplier side: sum |op u|^2 = int |F u|^2 (4 omega)^j.

    For u the grid integral is exact; for u# it is the sample-level value.
    epsilon is the change of the u# side under size -> 2 size.
    """
    if operator not in FOURIER_OPERATORS:
        raise domain_error(f"Unknown operator: {operator}. Available: {list(FOURIER_OPERATORS)}")
    if k < 0:
        raise domain_error("k must be >= 0", k=k)
    power = 2 * k if operator == "laplacian" else 2 * k + 1

    def sides(grid: int) -> Tuple[float, float]:
        cell = (2 * math.pi / grid) ** u.dim
        modulus = sample_modulus(u, grid)
        rearranged = steiner_samples(modulus)
        weight = _multiplier(grid, u.dim, power)
        return float(np.sum(modulus ** 2 * weight) * cell), float(np.sum(rearranged ** 2 * weight) * cell)

    lhs, rhs = sides(size)
    _, rhs_fine = sides(2 * size)
    eps = abs(rhs_fine - rhs)
    holds = lhs >= rhs - eps - INEQUALITY_SLACK * max(1.0, rhs)
    return QuotientReport(
        name=f"polya_szego_fourier_{operator}",
        lhs=lhs,
        rhs_sum=rhs,
        ratio=lhs / rhs if rhs > 0 else math.inf,
        constant=1.0,
        holds=holds,
        notes=[f"k={k}", f"epsilon={eps:.3e}"],
    )


@dataclass
class PairCheck:
    """Hardy-Littlewood and l^2 contraction for a pair (u, v) at sample level."""
    inner: float
    inner_rearranged: float
    distance: float
    distance_rearranged: float

    @property
    def holds(self) -> bool:
        tol = INEQUALITY_SLACK * max(1.0, self.inner_rearranged, self.distance)
        return self.inner <= self.inner_rearranged + tol and self.distance_rearranged <= self.distance + tol


def fourier_pair_check(u: SparseLatticeFunction, v: SparseLatticeFunction, size: int = 256) -> PairCheck:
    """|sum u conj(v)| <= sum u# v# and ||u# - v#|| <= ||u - v||."""
    if u.dim != v.dim:
        raise domain_error("dimension mismatch", left=u.dim, right=v.dim)
    cell = (2 * math.pi / size) ** u.dim
    mesh = midpoint_mesh(size, u.dim)
    fu = fourier_transform(u).evaluate(*mesh)
    fv = fourier_transform(v).evaluate(*mesh)
    ru, rv = steiner_samples(np.abs(fu)), steiner_samples(np.abs(fv))
    return PairCheck(
        inner=float(abs(np.sum(fu * np.conj(fv))) * cell),
        inner_rearranged=float(np.sum(ru * rv) * cell),
        distance=float(math.sqrt(np.sum(np.abs(fu - fv) ** 2) * cell)),
        distance_rearranged=float(math.sqrt(np.sum((ru - rv) ** 2) * cell)),
    )


# -------------------------
# SYMMETRIC-DECREASING
# -------------------------

def symmetric_decreasing(u: SparseLatticeFunction, size: int = FOURIER_GRID) -> SparseLatticeFunction:
    """u*(n) = v(|n|) with v the decreasing rearrangement of |u#| on Z+."""
    if u.dim != 1:
        raise domain_error("expected a function on Z (dim 1)", dim=u.dim)
    sharp = fourier_rearrangement(u, size).function
    half = SparseLatticeFunction(1, {n: abs(v) for n, v in sharp.items() if n[0] >= 0})
    v = decreasing_rearrange(half)
    values = {}
    for (n,), value in v.items():
        values[(n,)] = value
        values[(-n,)] = value
    return SparseLatticeFunction(1, values)


def forward_sq_energy(u: SparseLatticeFunction) -> float:
    """sum_n |u(n) - u(n-1)|^2 on Z."""
    items = dict((n[0], v) for n, v in u.items())
    points = set(items) | {n + 1 for n in items}
    return float(sum(abs(items.get(n, 0) - items.get(n - 1, 0)) ** 2 for n in points))


def symmetric_ps_check(u: SparseLatticeFunction, size: int = FOURIER_GRID) -> QuotientReport:
    """sum |u(n) - u(n-1)|^2 >= sum |u*(n) - u*(n-1)|^2."""
    star = symmetric_decreasing(u, size)
    lhs = forward_sq_energy(u)
    rhs = forward_sq_energy(star)
    holds = lhs >= rhs - INEQUALITY_SLACK * max(1.0, rhs)
    return QuotientReport(
        name="polya_szego_symmetric_decreasing",
        lhs=lhs,
        rhs_sum=rhs,
        ratio=lhs / rhs if rhs > 0 else math.inf,
        constant=1.0,
        holds=holds,
        notes=[f"grid {size}"],
    )


# -------------------------
# l^p SCAN AND SERIES
# -------------------------

@dataclass
class LpScanResult:
    p: float
    trials: int
    max_ratio: float
    witness: Optional[SparseLatticeFunction]
    ratios: List[float] = field(default_factory=list, repr=False)


def lp_ratio(u: SparseLatticeFunction, p: float, size: int = 1024) -> float:
    """sum |u|^p / sum |u#|^p."""
    sharp = fourier_rearrangement(u, size).function
    num = float(np.sum(np.abs(u.values_array()) ** p))
    den = float(np.sum(np.abs(sharp.values_array()) ** p))
    return num / den


def lp_ratio_scan(
    p: float,
    trials: int = 200,
    seed: int = DEFAULT_SEED,
    support: int = 4,
    size: int = 1024,
) -> LpScanResult:
    """Empirical maximum of sum |u|^p / sum |u#|^p over random real u on {0..support-1}."""
    if p <= 2:
        raise domain_error("the l^p comparison is for p > 2", p=p)
    rng = np.random.default_rng(seed)
    best, witness = 0.0, None
    ratios = []
    for _ in range(trials):
        u = SparseLatticeFunction.from_sequence(list(rng.normal(size=support)))
        ratio = lp_ratio(u, p, size)
        ratios.append(ratio)
        if ratio > best:
            best, witness = ratio, u
    logger.info("l^%g scan: %d trials, max ratio %.6f", p, trials, best)
    return LpScanResult(p, trials, best, witness, ratios)


@dataclass
class SeriesReport:
    terms: int
    partial: float
    tail: float
    value: float
    target: float

    @property
    def error(self) -> float:
        return abs(self.value - self.target)


def series_identity_check(terms: int = 10_000) -> SeriesReport:
    """sum_{n in Z} 1/(4n^2 - 1)^2 = pi^2 / 8: partial sum over |n| <= terms plus an integral tail."""
    if terms < 1:
        raise domain_error("terms must be >= 1", terms=terms)
    n = np.arange(1, terms + 1, dtype=float)
    partial = 1.0 + 2 * float(np.sum(1.0 / (4 * n * n - 1) ** 2))
    tail, _ = integrate.quad(lambda x: 2.0 / (4 * x * x - 1) ** 2, terms + 0.5, np.inf)
    return SeriesReport(terms, partial, tail, partial + tail, math.pi ** 2 / 8)

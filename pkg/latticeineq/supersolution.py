"""
One-dimensional weighted Hardy machinery on N_0.

Provides:
- the two-parameter weight w_{alpha,beta} and the supersolution criterion
- the coefficients b_k(alpha) (float and exact rational)
- weighted Hardy quotients, the improved remainder and sharpness witnesses
- the weight-dominance scan that maps where the method breaks down
- the ground-state form of the supersolution lemma on arbitrary finite graphs
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from scipy import linalg, special

from .config import (
    INEQUALITY_SLACK,
    LIMIT_HEAD_TERMS,
    LIMIT_TAIL_TERMS,
    REMAINDER_SLACK,
    REMAINDER_TERMS,
    SUPERSOLUTION_TOL,
)
from .errors import domain_error, precondition_error
from .lattice import SparseLatticeFunction, require_zero_at_origin
from .reports import QuotientReport

logger = logging.getLogger(__name__)

Number = Union[float, Fraction]


@dataclass(frozen=True)
class HardyWeightParams:
    """(alpha, beta) of the weight w_{alpha,beta}."""
    alpha: float
    beta: float


@dataclass
class SupersolutionTriple:
    """v, varphi and w of the one-dimensional supersolution criterion."""
    v: Callable[[int], float]
    varphi: Callable[[int], float]
    w: Callable[[int], float]


@dataclass
class SupersolutionReport:
    holds: bool
    n_max: int
    first_violation: Optional[int] = None
    min_residual: float = 0.0


# -------------------------
# WEIGHT
# -------------------------

def weight_w(params: HardyWeightParams, n: int) -> float:
    """w_{alpha,beta}(n); n = 1 uses the boundary branch 1 + 2^a - 2^(a+b)."""
    if n < 1:
        raise domain_error(f"weight_w needs n >= 1, got {n}", n=n)
    a, b = params.alpha, params.beta
    if n == 1:
        return 1.0 + 2.0 ** a - 2.0 ** (a + b)
    x = 1.0 / n
    return n ** a * (1.0 + (1.0 + x) ** a - (1.0 - x) ** b - (1.0 + x) ** (a + b))


def power_triple(alpha: float, beta: float) -> SupersolutionTriple:
    """v = n^alpha, varphi = n^beta with varphi(0) = 0, w = w_{alpha,beta}."""
    params = HardyWeightParams(alpha, beta)
    return SupersolutionTriple(
        v=lambda n: float(n) ** alpha,
        varphi=lambda n: 0.0 if n == 0 else float(n) ** beta,
        w=lambda n: weight_w(params, n),
    )


def supersolution_check(
    triple: SupersolutionTriple,
    n_max: int,
    tol: float = SUPERSOLUTION_TOL,
) -> SupersolutionReport:
    """
    Check (Delta phi(n) v(n) - (phi(n+1)-phi(n))(v(n+1)-v(n))) >= w(n) phi(n)
    for 1 <= n <= n_max, with Delta phi(n) = 2phi(n) - phi(n-1) - phi(n+1).
    """
    if n_max < 1:
        raise domain_error("n_max must be >= 1", n_max=n_max)

    phi = [triple.varphi(n) for n in range(n_max + 2)]
    for n in range(1, n_max + 2):
        if not phi[n] > 0:
            raise precondition_error(f"varphi must be positive on N, varphi({n}) = {phi[n]}", n=n)

    first: Optional[int] = None
    min_residual = math.inf
    for n in range(1, n_max + 1):
        v_n, v_next = triple.v(n), triple.v(n + 1)
        lap = 2 * phi[n] - phi[n - 1] - phi[n + 1]
        lhs = lap * v_n - (phi[n + 1] - phi[n]) * (v_next - v_n)
        rhs = triple.w(n) * phi[n]
        residual = lhs - rhs
        scale = max(1.0, abs(lhs), abs(rhs))
        min_residual = min(min_residual, residual / scale)
        if residual < -tol * scale and first is None:
            first = n
            logger.debug(f"supersolution violated at n={n}: lhs={lhs!r} rhs={rhs!r}")

    return SupersolutionReport(
        holds=first is None,
        n_max=n_max,
        first_violation=first,
        min_residual=float(min_residual),
    )


# -------------------------
# COEFFICIENTS b_k
# -------------------------

def gen_binom_exact(x: Fraction, k: int) -> Fraction:
    """Generalized binomial C(x, k) as an exact product."""
    out = Fraction(1)
    for i in range(k):
        out = out * (x - i) / (i + 1)
    return out


def coeff_b_exact(alpha: Union[Fraction, int], k: int) -> Fraction:
    """b_k(alpha) = C(a,k) - (-1)^k C((1-a)/2,k) - C((1+a)/2,k), exactly."""
    if k < 2:
        raise domain_error("b_k needs k >= 2", k=k)
    a = Fraction(alpha)
    sign = 1 if k % 2 == 0 else -1
    return gen_binom_exact(a, k) - sign * gen_binom_exact((1 - a) / 2, k) - gen_binom_exact((1 + a) / 2, k)


def coeff_b(alpha: Number, k: int) -> float:
    """b_k(alpha) in floating point; rational input goes through the exact path."""
    if k < 2:
        raise domain_error("b_k needs k >= 2", k=k)
    if isinstance(alpha, (Fraction, int)):
        return float(coeff_b_exact(alpha, k))
    a = float(alpha)
    sign = 1.0 if k % 2 == 0 else -1.0
    return float(special.binom(a, k) - sign * special.binom((1 - a) / 2, k) - special.binom((1 + a) / 2, k))


def b4_closed_form(alpha: Union[Fraction, int]) -> Fraction:
    a = Fraction(alpha)
    return (5 - a) * (1 - a) * (7 * a ** 2 - 6 * a + 3) / 192


def b6_closed_form(alpha: Union[Fraction, int]) -> Fraction:
    a = Fraction(alpha)
    return (1 - a) * (9 - a) * (31 * a ** 4 - 170 * a ** 3 + 536 * a ** 2 - 310 * a + 105) / 23040


def sign_scan_b(alphas: Iterable[Union[Fraction, int]], k_range: Iterable[int]) -> Dict[Fraction, Dict[int, int]]:
    """Exact sign (-1, 0, 1) of b_k(alpha) on a rational grid."""
    ks = list(k_range)
    table: Dict[Fraction, Dict[int, int]] = {}
    for alpha in alphas:
        a = Fraction(alpha)
        row = {}
        for k in ks:
            b = coeff_b_exact(a, k)
            row[k] = (b > 0) - (b < 0)
        table[a] = row
    return table


# -------------------------
# QUOTIENTS
# -------------------------

def _half_line_items(u: SparseLatticeFunction) -> List[Tuple[int, complex]]:
    if u.dim != 1:
        raise domain_error("expected a function on N_0 (dim 1)", dim=u.dim)
    items = [(k[0], v) for k, v in u.items()]
    for n, _ in items:
        if n < 0:
            raise domain_error(f"function on N_0 has support at {n}", n=n)
    return items


def weighted_sums(u: SparseLatticeFunction, alpha: float) -> Tuple[float, float]:
    """(sum_{n>=1} |u(n)-u(n-1)|^2 n^a, sum_{n>=1} |u(n)|^2 n^(a-2))."""
    items = _half_line_items(u)
    if not items:
        return 0.0, 0.0
    top = max(n for n, _ in items) + 1
    vals = np.zeros(top + 1, dtype=complex)
    for n, v in items:
        vals[n] = v
    n = np.arange(1, top + 1, dtype=float)
    diff = np.abs(vals[1:] - vals[:-1]) ** 2
    lhs = float(np.sum(diff * n ** alpha))
    rhs = float(np.sum(np.abs(vals[1:]) ** 2 * n ** (alpha - 2)))
    return lhs, rhs


def hardy_quotient_weighted(u: SparseLatticeFunction, alpha: float) -> QuotientReport:
    """Weighted Hardy quotient on N_0 against the constant (alpha-1)^2/4."""
    _half_line_items(u)
    require_zero_at_origin(u)
    lhs, rhs = weighted_sums(u, alpha)
    if rhs <= 0:
        raise domain_error("empty right-hand side (u vanishes identically)")
    constant = (alpha - 1.0) ** 2 / 4.0
    return QuotientReport.build("weighted_hardy_half_line", lhs, rhs, constant)


@dataclass
class ImprovementReport:
    """Improved weighted Hardy: the gap against the truncated b_k remainder."""
    alpha: float
    gap: float
    remainder: float
    terms: int
    tail_bound: float
    holds: bool
    notes: List[str] = field(default_factory=list)


def improvement_check(
    u: SparseLatticeFunction,
    alpha: float,
    terms: int = REMAINDER_TERMS,
    slack: float = REMAINDER_SLACK,
) -> ImprovementReport:
    """
    LHS - ((a-1)^2/4) * sum |u|^2 n^(a-2) against sum_{k=3}^{K} b_k sum_{n>=2} |u|^2 n^(a-k).

    For n >= 2 consecutive inner sums shrink at least by 1/2, which bounds the dropped tail.
    """
    require_zero_at_origin(u)
    lhs, rhs = weighted_sums(u, alpha)
    gap = lhs - (alpha - 1.0) ** 2 / 4.0 * rhs

    items = [(n, abs(v) ** 2) for n, v in _half_line_items(u) if n >= 2]
    ns = np.array([n for n, _ in items], dtype=float)
    mass = np.array([m for _, m in items], dtype=float)

    def inner(k: int) -> float:
        if ns.size == 0:
            return 0.0
        return float(np.sum(mass * ns ** (alpha - k)))

    remainder = sum(coeff_b(alpha, k) * inner(k) for k in range(3, terms + 1))
    last = inner(terms)
    tail_bound = sum(abs(coeff_b(alpha, terms + j)) * last * 0.5 ** j for j in range(1, 21))
    notes = [f"remainder truncated at k={terms}; tail bounded by {tail_bound:.3e}"]
    return ImprovementReport(
        alpha=alpha,
        gap=gap,
        remainder=remainder,
        terms=terms,
        tail_bound=tail_bound,
        holds=remainder <= gap + slack,
        notes=notes,
    )


# -------------------------
# SHARPNESS
# -------------------------

def sharpness_family(alpha: float, beta: float, N: int) -> SparseLatticeFunction:
    """
    u(n) = n^beta on [1, N], linear decay N^beta (2 - n/N) on [N, 2N], 0 elsewhere.
    """
    if not 2 * beta + alpha - 2 < -1:
        raise domain_error(
            "sharpness family needs 2*beta + alpha - 2 < -1",
            alpha=alpha,
            beta=beta,
        )
    if N < 2:
        raise domain_error("sharpness family needs N >= 2", N=N)
    values: Dict[Tuple[int], float] = {}
    for n in range(1, N + 1):
        values[(n,)] = float(n) ** beta
    top = float(N) ** beta
    for n in range(N + 1, 2 * N):
        values[(n,)] = top * (2.0 - n / N)
    return SparseLatticeFunction(1, values)


def _series_coefficients(beta: float, alpha: float, offset: float, terms: int) -> np.ndarray:
    """
    Coefficients P_j with (n^b - (n-1)^b)^2 (n - offset)^a = n^(2b+a-2) sum_j P_j n^(-j).
    """
    j = np.arange(terms)
    diff = (-1.0) ** j * special.binom(beta, j + 1)
    sq = np.convolve(diff, diff)[:terms]
    weight = special.binom(alpha, j) * (-offset) ** j
    return np.convolve(sq, weight)[:terms]


def power_family_limit_ratio(
    alpha: float,
    beta: float,
    offset: float = 0.0,
    head: int = LIMIT_HEAD_TERMS,
    tail_terms: int = LIMIT_TAIL_TERMS,
) -> float:
    """
    N -> infinity value of the sharpness-family quotient.

    Numerator sum_{n>=1} |n^b - (n-1)^b|^2 (n - offset)^a (with 0^b = 0),
    denominator sum_{n>=1} n^(2b+a-2) = zeta(2 - 2b - a). The numerator tail
    beyond `head` is summed with Hurwitz zeta values.
    """
    s = 2.0 - 2.0 * beta - alpha
    if not s > 1.0:
        raise domain_error("limit ratio needs 2*beta + alpha - 2 < -1", alpha=alpha, beta=beta)

    n = np.arange(2, head + 1, dtype=float)
    head_sum = float(np.sum((n ** beta - (n - 1) ** beta) ** 2 * (n - offset) ** alpha))
    first = (1.0 - offset) ** alpha

    coeffs = _series_coefficients(beta, alpha, offset, tail_terms)
    exps = s + np.arange(tail_terms)
    tail_sum = float(np.sum(coeffs * special.zeta(exps, head + 1)))

    denominator = float(special.zeta(s, 1))
    return (first + head_sum + tail_sum) / denominator


def rayleigh_sharp_estimate(alpha: float, size: int) -> float:
    """
    Smallest generalized eigenvalue of the weighted Dirichlet form on {1..size}
    (u(0) = u(size+1) = 0) against diag(n^(alpha-2)); an upper bracket for the
    sharp constant that decreases in size.
    """
    if size < 2:
        raise domain_error("size must be >= 2", size=size)
    n = np.arange(1, size + 1, dtype=float)
    main = n ** alpha + (n + 1) ** alpha
    off = -((n[1:]) ** alpha)
    a = np.diag(main) + np.diag(off, 1) + np.diag(off, -1)
    b = np.diag(n ** (alpha - 2))
    vals = linalg.eigh(a, b, eigvals_only=True, subset_by_index=[0, 0])
    return float(vals[0])


# -------------------------
# LIMITATIONS
# -------------------------

@dataclass
class DominanceReport:
    alpha: float
    min_gap: float
    argmin: float
    gaps: List[Tuple[float, float]] = field(default_factory=list)


def dominance_gap(alpha: float, x: float) -> float:
    """g(x) - ((alpha-1)^2/4) x^2 with g(x) = 1+(1+x)^a-(1-x)^((1-a)/2)-(1+x)^((1+a)/2)."""
    g = 1.0 + (1.0 + x) ** alpha - (1.0 - x) ** ((1.0 - alpha) / 2.0) - (1.0 + x) ** ((1.0 + alpha) / 2.0)
    return g - (alpha - 1.0) ** 2 / 4.0 * x * x


def weight_dominance_scan(alpha: float, grid: Optional[Sequence[float]] = None) -> DominanceReport:
    """Minimum of the dominance gap over a grid in (0, 1/2]."""
    xs = list(grid) if grid is not None else list(np.linspace(0.01, 0.5, 50))
    if not xs:
        raise domain_error("empty grid")
    for x in xs:
        if not 0.0 < x <= 0.5:
            raise domain_error(f"grid point {x} outside (0, 1/2]", x=x)
    gaps = [(float(x), dominance_gap(alpha, float(x))) for x in xs]
    argmin, min_gap = min(gaps, key=lambda t: t[1])
    logger.debug(f"dominance scan alpha={alpha}: min_gap={min_gap:.3e} at x={argmin}")
    return DominanceReport(alpha=alpha, min_gap=min_gap, argmin=argmin, gaps=gaps)


# -------------------------
# GENERAL GRAPHS
# -------------------------

def lattice_box_graph(radius: int, dim: int = 2) -> nx.Graph:
    """Z^d restricted to the box [-radius, radius]^d."""
    if dim == 2:
        return nx.grid_2d_graph(range(-radius, radius + 1), range(-radius, radius + 1))
    graph = nx.grid_graph(dim=[range(-radius, radius + 1)] * dim)
    return graph


def graph_supersolution_check(
    graph: nx.Graph,
    phi: Union[Mapping[Hashable, float], Callable[[Hashable], float]],
    u: Mapping[Hashable, float],
) -> QuotientReport:
    """
    Ground-state form on a finite graph:
    sum_{edges} |u(x)-u(y)|^2 >= sum_x (Delta phi(x) / phi(x)) |u(x)|^2
    with Delta phi(x) = sum_{y ~ x} (phi(x) - phi(y)) and phi > 0.

    The suites pass regularized_power_phi(beta), i.e. (1 + |n|^2)^(beta/2)
    instead of |n|^beta, so phi stays finite and positive at the origin. The
    two agree to relative order |beta|/|n|^2 away from it.
    """
    get_phi = phi if callable(phi) else phi.__getitem__

    lhs = 0.0
    for x, y in graph.edges():
        lhs += abs(u.get(x, 0.0) - u.get(y, 0.0)) ** 2

    rhs = 0.0
    for x, value in u.items():
        if value == 0:
            continue
        if x not in graph:
            raise precondition_error(f"support point {x} is not a graph vertex")
        px = get_phi(x)
        if not px > 0:
            raise precondition_error(f"phi must be positive, phi({x}) = {px}")
        lap = sum(px - get_phi(y) for y in graph.neighbors(x))
        rhs += lap / px * abs(value) ** 2

    # rhs may be negative, so build() (which assumes rhs_sum >= 0) is not used
    return QuotientReport(
        name="graph_supersolution",
        lhs=lhs,
        rhs_sum=rhs,
        ratio=lhs / rhs if rhs > 0 else math.inf,
        constant=1.0,
        holds=lhs >= rhs - INEQUALITY_SLACK * max(1.0, abs(rhs)),
    )


def regularized_power_phi(beta: float) -> Callable[[Tuple[int, ...]], float]:
    """phi(n) = (1 + |n|^2)^(beta/2), positive everywhere including the origin."""
    def phi(point: Tuple[int, ...]) -> float:
        return (1.0 + sum(c * c for c in point)) ** (beta / 2.0)
    return phi

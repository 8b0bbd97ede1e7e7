"""
Fourier-side discrete Hardy and Rellich inequalities on Z and N_0.

- verify_discrete_inequality: evaluates the improved weighted Hardy inequality,
  its sharp corollary and the higher-order (power-weight) Rellich families
- zero_moment_conditions: the moment conditions under which the Z-Rellich
  inequality applies to an extension from N_0
- torus_lemma_check: the auxiliary torus inequalities and identities, evaluated on
  trigonometric polynomials with exact quadrature
- spectral_multiplier_check: Parseval form of |Delta^m u|^2 and |D Delta^m u|^2
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from .coefficients import (
    alpha_raw,
    beta_raw,
    binom,
    higher_order_constant,
    improved_hardy_coefficients,
    improved_hardy_tail,
)
from .config import IDENTITY_RTOL, QUADRATURE_TOL
from .errors import domain_error, precondition_error
from .lattice import SparseLatticeFunction, backward_difference, laplacian_power, require_zero_at_origin
from .reports import QuotientReport
from .supersolution import power_family_limit_ratio
from .trig import TrigPolynomial

logger = logging.getLogger(__name__)

INEQUALITY_KINDS = (
    "improved_weighted_hardy",
    "weighted_hardy",
    "rellich",
    "grad_rellich",
    "power_weight_laplacian",
    "power_weight_grad_laplacian",
)


@dataclass(frozen=True)
class InequalityParams:
    """Which inequality to evaluate, with its order parameters."""
    kind: str
    k: int = 1
    m: int = 1


def _line_items(u: SparseLatticeFunction) -> Dict[int, complex]:
    if u.dim != 1:
        raise domain_error("expected a function on Z (dim 1)", dim=u.dim)
    return {x[0]: v for x, v in u.items()}


def _weighted_sq_sum(f: SparseLatticeFunction, weight) -> float:
    return float(sum(abs(v) ** 2 * weight(n) for n, v in _line_items(f).items()))


def _half_line_array(u: SparseLatticeFunction, pad: int) -> np.ndarray:
    items = _line_items(u)
    for n in items:
        if n < 0:
            raise domain_error(f"function on N_0 has support at {n}", n=n)
    top = max(items, default=0)
    vals = np.zeros(top + pad + 1, dtype=complex)
    for n, v in items.items():
        vals[n] = v
    return vals


def half_line_laplacian(vals: np.ndarray) -> np.ndarray:
    """Delta v(0) = v(0) - v(1); Delta v(n) = 2v(n) - v(n-1) - v(n+1) for n >= 1."""
    ext = np.concatenate([vals, [0.0]])
    out = np.empty_like(vals)
    out[0] = ext[0] - ext[1]
    out[1:] = 2 * ext[1:-1] - ext[:-2] - ext[2:]
    return out


def _require_leading_zeros(vals: np.ndarray, upto: int) -> None:
    for i in range(min(upto + 1, len(vals))):
        if vals[i] != 0:
            raise precondition_error(f"u({i}) must vanish for 0 <= i <= {upto}", index=i)


def verify_discrete_inequality(params: InequalityParams, u: SparseLatticeFunction) -> QuotientReport:
    """
    Evaluate one discrete inequality on u.

    Z kinds need u(0) = 0; N_0 kinds need support in n >= 0 plus the leading
    zero conditions of their order.
    """
    kind, k, m = params.kind, params.k, params.m

    if kind in ("improved_weighted_hardy", "weighted_hardy"):
        if k < 1:
            raise domain_error("k must be >= 1", k=k)
        _line_items(u)
        require_zero_at_origin(u)
        du = backward_difference(u, 0)
        lhs = _weighted_sq_sum(du, lambda n: (n - 0.5) ** (2 * k))
        if kind == "weighted_hardy":
            rhs = _weighted_sq_sum(u, lambda n: float(n) ** (2 * k - 2))
            return QuotientReport.build(kind, lhs, rhs, (2 * k - 1) ** 2 / 4.0)
        gammas = improved_hardy_coefficients(k)
        rhs = sum(
            float(g) * _weighted_sq_sum(u, lambda n, e=2 * k - 2 * i: float(n) ** e)
            for i, g in gammas.items()
        )
        tail = float(improved_hardy_tail(k)) * _weighted_sq_sum(u, lambda n: 1.0 / (n * n))
        notes = [f"remainder sum over i=1..{k} is finite; the 2^(-2k-2) |u|^2/n^2 term is included in full"]
        return QuotientReport.build(kind, lhs, rhs + tail, 1.0, notes=notes)

    if kind in ("rellich", "grad_rellich"):
        if m < 1:
            raise domain_error("m must be >= 1", m=m)
        vals = _half_line_array(u, pad=2 * m + 2)
        zeros_upto = 2 * m - 1 if kind == "rellich" else 2 * m
        _require_leading_zeros(vals, zeros_upto)
        lap = vals
        for _ in range(m):
            lap = half_line_laplacian(lap)
        n = np.arange(1, len(vals), dtype=float)
        if kind == "rellich":
            lhs = float(np.sum(np.abs(lap) ** 2))
            rhs = float(np.sum(np.abs(vals[1:]) ** 2 / n ** (4 * m)))
        else:
            lhs = float(np.sum(np.abs(lap[1:] - lap[:-1]) ** 2))
            rhs = float(np.sum(np.abs(vals[1:]) ** 2 / n ** (4 * m + 2)))
        family = "laplacian" if kind == "rellich" else "grad_laplacian"
        constant = float(higher_order_constant(m, family))
        return QuotientReport.build(kind, lhs, rhs, constant)

    if kind in ("power_weight_laplacian", "power_weight_grad_laplacian"):
        _line_items(u)
        require_zero_at_origin(u)
        lap = laplacian_power(u, m)
        if kind == "power_weight_laplacian":
            constant = float(higher_order_constant(m, "weighted_laplacian", k))
            lhs = _weighted_sq_sum(lap, lambda n: float(n) ** (2 * k))
            rhs = _weighted_sq_sum(u, lambda n: float(n) ** (2 * k - 4 * m))
        else:
            constant = float(higher_order_constant(m, "weighted_grad_laplacian", k))
            lhs = _weighted_sq_sum(backward_difference(lap, 0), lambda n: (n - 0.5) ** (2 * k))
            rhs = _weighted_sq_sum(u, lambda n: float(n) ** (2 * k - 4 * m - 2))
        return QuotientReport.build(kind, lhs, rhs, constant)

    raise domain_error(f"Unknown inequality: {kind}. Available: {list(INEQUALITY_KINDS)}")


def weighted_hardy_limit_ratio(k: int, beta: float) -> float:
    """
    N -> infinity quotient of n^beta on n >= 1 in the (n - 1/2)^(2k) weighted inequality;
    tends to (2k-1)^2/4 as beta -> (1-2k)/2 from below.
    """
    return power_family_limit_ratio(2.0 * k, beta, offset=0.5)


@dataclass
class MomentReport:
    m: int
    values: Dict[int, float]
    holds: bool


def zero_moment_conditions(m: int, v: SparseLatticeFunction, tol: float = IDENTITY_RTOL) -> MomentReport:
    """
    S_k = sum_{j=0}^{2m-k} sum_{0<=j'<=j, 2j' != j} C(2m-k, j) C(j, j') (-1/2)^j (2j'-j)^(-k) v(2j'-j)
    for 1 <= k <= 2m; the conditions hold when every S_k vanishes. values holds |S_k|.
    """
    if m < 1:
        raise domain_error("m must be >= 1", m=m)
    items = _line_items(v)
    if items.get(0, 0) != 0:
        raise precondition_error("v(0) must vanish")
    scale = max([1.0] + [abs(x) for x in items.values()])
    values: Dict[int, float] = {}
    for k in range(1, 2 * m + 1):
        total = 0.0
        for j in range(0, 2 * m - k + 1):
            for jp in range(0, j + 1):
                if 2 * jp == j:
                    continue
                n = 2 * jp - j
                if n not in items:
                    continue
                total += binom(2 * m - k, j) * binom(j, jp) * (-0.5) ** j * float(n) ** (-k) * items[n]
        values[k] = float(abs(total))
    holds = all(abs(s) <= tol * scale for s in values.values())
    return MomentReport(m=m, values=values, holds=holds)


# -------------------------
# TORUS LEMMAS
# -------------------------

TORUS_LEMMAS = (
    "sine_weight_expansion",
    "zero_average_sine_poincare",
    "sine_weight_lower_bound",
    "power_sine_poincare",
    "double_sine_lower_bound",
    "integration_by_parts_identity",
)


@dataclass
class LemmaReport:
    lemma: str
    lhs: float
    rhs: float
    residual: float
    identity: bool
    holds: bool
    notes: List[str] = field(default_factory=list)


def _integrate_complex(p: TrigPolynomial) -> complex:
    return p.quadrature() if p.has_integer_frequencies() else p.integral()


def _integrate(p: TrigPolynomial) -> float:
    return float(_integrate_complex(p).real)


def _norm_sq(p: TrigPolynomial, weight: Optional[TrigPolynomial] = None) -> float:
    sq = p.abs_sq()
    return _integrate(sq if weight is None else sq * weight)


def _require_average(u: TrigPolynomial, weight: Optional[TrigPolynomial], what: str) -> None:
    target = u if weight is None else u * weight
    avg = abs(_integrate_complex(target))
    scale = max(1.0, math.sqrt(abs(_norm_sq(u))))
    if avg > QUADRATURE_TOL * scale:
        raise precondition_error(f"{what} is violated (integral = {avg:.3e})")


def _sin_half_power(power: int) -> TrigPolynomial:
    """sin^(2p)(x/2) as (1 - cos x)^p / 2^p, integer frequencies only."""
    if power % 2:
        return TrigPolynomial.sin_half() ** power
    base = (TrigPolynomial.constant(1, 1.0) - TrigPolynomial.cos()).scale(0.5)
    return base ** (power // 2)


def _report(lemma: str, lhs: float, rhs: float, identity: bool, notes: Optional[List[str]] = None) -> LemmaReport:
    scale = max(1.0, abs(lhs), abs(rhs))
    residual = (lhs - rhs) / scale
    if identity:
        holds = abs(residual) <= QUADRATURE_TOL
    else:
        holds = residual >= -QUADRATURE_TOL
    return LemmaReport(lemma, lhs, rhs, residual, identity, holds, list(notes or []))


def torus_lemma_check(
    lemma: str,
    u: TrigPolynomial,
    k: int = 1,
    w: Optional[TrigPolynomial] = None,
    i: int = 0,
    j: int = 2,
) -> LemmaReport:
    """
    Evaluate one torus identity or inequality on a one-dimensional trig polynomial u.

    sine_weight_expansion         int |d^k(u s)|^2 = sum_i alpha_i int |d^i u|^2 + beta_i int |d^i u|^2 s^2
    zero_average_sine_poincare    int |u'|^2 s^2 >= (1/16) int |u|^2, u zero-average
    sine_weight_lower_bound       int |d^k(u s)|^2 >= sum_{i<k} (alpha_i + beta_{i+1}/16) int |d^i u|^2
                                  + beta_0 int |u|^2 s^2, u zero-average
    power_sine_poincare           int |u'|^2 s^(2k) >= ((4k-3)/16) int |u|^2 s^(2k-2),
                                  int u s^(2k-2) = 0
    double_sine_lower_bound       int |d^k(u s^2)|^2 >= alpha_{k-1}^k (alpha_{k-2}^{k-1}
                                  + beta_{k-1}^{k-1}/16) int |d^(k-2) u|^2, k >= 2, u zero-average
    integration_by_parts_identity Re int d^i u conj(d^j u) w = sum_sigma int C_sigma |d^sigma u|^2

    with s = sin(x/2).
    """
    if u.dim != 1:
        raise domain_error("torus lemmas are one-dimensional", dim=u.dim)
    if not u.has_integer_frequencies():
        raise precondition_error("u must be 2pi-periodic (integer frequencies)")
    s = TrigPolynomial.sin_half()
    s2 = _sin_half_power(2)

    if lemma == "sine_weight_expansion":
        if k < 1:
            raise domain_error("k must be >= 1", k=k)
        lhs = _norm_sq((u * s).derivative(0, k))
        rhs = 0.0
        for idx in range(k + 1):
            du = u.derivative(0, idx)
            rhs += float(alpha_raw(idx, k)) * _norm_sq(du) + float(beta_raw(idx, k)) * _norm_sq(du, s2)
        return _report(lemma, lhs, rhs, identity=True)

    if lemma == "zero_average_sine_poincare":
        _require_average(u, None, "zero average")
        lhs = _norm_sq(u.derivative(), s2)
        rhs = _norm_sq(u) / 16.0
        return _report(lemma, lhs, rhs, identity=False)

    if lemma == "sine_weight_lower_bound":
        if k < 1:
            raise domain_error("k must be >= 1", k=k)
        _require_average(u, None, "zero average")
        lhs = _norm_sq((u * s).derivative(0, k))
        rhs = float(beta_raw(0, k)) * _norm_sq(u, s2)
        for idx in range(k):
            coeff = alpha_raw(idx, k) + beta_raw(idx + 1, k) / 16
            rhs += float(coeff) * _norm_sq(u.derivative(0, idx))
        return _report(lemma, lhs, rhs, identity=False)

    if lemma == "power_sine_poincare":
        if k < 1:
            raise domain_error("k must be >= 1", k=k)
        low = _sin_half_power(2 * k - 2)
        _require_average(u, low, f"orthogonality to sin^{2 * k - 2}(x/2)")
        lhs = _norm_sq(u.derivative(), _sin_half_power(2 * k))
        rhs = (4 * k - 3) / 16.0 * _norm_sq(u, low)
        return _report(lemma, lhs, rhs, identity=False)

    if lemma == "double_sine_lower_bound":
        if k < 2:
            raise domain_error("k must be >= 2", k=k)
        _require_average(u, None, "zero average")
        lhs = _norm_sq((u * s2).derivative(0, k))
        coeff = alpha_raw(k - 1, k) * (alpha_raw(k - 2, k - 1) + beta_raw(k - 1, k - 1) / 16)
        rhs = float(coeff) * _norm_sq(u.derivative(0, k - 2))
        return _report(lemma, lhs, rhs, identity=False)

    if lemma == "integration_by_parts_identity":
        if w is None:
            w = TrigPolynomial.cos()
        if not 0 <= i < j:
            raise domain_error("need 0 <= i < j", i=i, j=j)
        lhs = _integrate(u.derivative(0, i) * u.derivative(0, j).conj() * w)
        rhs = 0.0
        for sigma in range(i, (i + j) // 2 + 1):
            c = binom(j - sigma - 1, sigma - i - 1) + Fraction(binom(j - sigma - 1, sigma - i), 2)
            if c == 0:
                continue
            weight = w.derivative(0, i + j - 2 * sigma).scale(float(c) * (-1) ** (j - sigma))
            rhs += _integrate(u.derivative(0, sigma).abs_sq() * weight)
        return _report(lemma, lhs, rhs, identity=True)

    raise domain_error(f"Unknown lemma: {lemma}. Available: {list(TORUS_LEMMAS)}")


@dataclass
class ClosedFormReport:
    n: int
    m: int
    residuals: Dict[str, float]
    holds: bool


def sine_product_closed_forms(n: int, m: int) -> ClosedFormReport:
    """
    For u = exp(i n x/2) sin(x/2), compare exact integrals with
    4^m int |d^m u|^2         = (pi/2)((n+1)^(2m) + (n-1)^(2m))
    4^m int |d^m u|^2 cos x   = -(pi/2)(n^2-1)^m
    4^m int |d^m(u s)|^2      = (pi/8)((n+2)^(2m) + (n-2)^(2m) + 4 n^(2m))
    """
    if m < 0:
        raise domain_error("m must be >= 0", m=m)
    u = TrigPolynomial.exponential((Fraction(n, 2),)) * TrigPolynomial.sin_half()
    scale = 4.0 ** m
    du = u.derivative(0, m)
    values = {
        "energy": scale * du.abs_sq().integral().real,
        "cos_energy": scale * (du.abs_sq() * TrigPolynomial.cos()).integral().real,
        "sine_energy": scale * (u * TrigPolynomial.sin_half()).derivative(0, m).abs_sq().integral().real,
    }
    expected = {
        "energy": math.pi / 2 * ((n + 1) ** (2 * m) + (n - 1) ** (2 * m)),
        "cos_energy": -math.pi / 2 * (n * n - 1) ** m,
        "sine_energy": math.pi / 8 * ((n + 2) ** (2 * m) + (n - 2) ** (2 * m) + 4 * n ** (2 * m)),
    }
    residuals = {
        key: abs(values[key] - expected[key]) / max(1.0, abs(expected[key])) for key in values
    }
    return ClosedFormReport(n, m, residuals, all(r <= QUADRATURE_TOL for r in residuals.values()))


# -------------------------
# SPECTRAL MULTIPLIERS
# -------------------------

def fourier_transform(u: SparseLatticeFunction) -> TrigPolynomial:
    """F(u)(x) = (2pi)^(-d/2) sum_n u(n) exp(-i n.x)."""
    norm = (2 * math.pi) ** (-u.dim / 2)
    return TrigPolynomial(u.dim, {tuple(-c for c in n): v * norm for n, v in u.items()})


def spectral_multiplier_check(u: SparseLatticeFunction, m: int, operator: str = "laplacian") -> LemmaReport:
    """
    sum |Delta^m u|^2 = 4^(2m) int |F(u)|^2 sin^(4m)(x/2) and
    sum |D Delta^m u|^2 = 4^(2m+1) int |F(u)|^2 sin^(4m+2)(x/2) on Z.
    """
    if m < 0:
        raise domain_error("m must be >= 0", m=m)
    _line_items(u)
    lap = laplacian_power(u, m)
    if operator == "laplacian":
        lhs = float(sum(abs(v) ** 2 for _, v in lap.items()))
        power = 2 * m
    elif operator == "grad_laplacian":
        lhs = float(sum(abs(v) ** 2 for _, v in backward_difference(lap, 0).items()))
        power = 2 * m + 1
    else:
        raise domain_error(f"Unknown operator: {operator}. Available: ['laplacian', 'grad_laplacian']")
    f = fourier_transform(u)
    rhs = 4.0 ** power * _integrate(f.abs_sq() * _sin_half_power(2 * power))
    return _report(f"spectral_multiplier_{operator}", lhs, rhs, identity=True)

"""
Decreasing rearrangement on the half-line Z+ = {0, 1, 2, ...}.

u~(k) is the (k+1)-th largest value of |u|. Functions are one-dimensional
SparseLatticeFunction objects supported in n >= 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Union

import numpy as np
from scipy import integrate

from .config import IDENTITY_RTOL, INEQUALITY_SLACK
from .errors import domain_error, precondition_error
from .hardy_fourier import half_line_laplacian
from .lattice import SparseLatticeFunction
from .reports import QuotientReport

logger = logging.getLogger(__name__)

Weight = Union[Callable[[int], float], Sequence[float]]


def half_line_moduli(u: SparseLatticeFunction, length: int = 0) -> np.ndarray:
    """|u(0)|, |u(1)|, ... padded with zeros to at least `length` entries."""
    if u.dim != 1:
        raise domain_error("expected a function on Z+ (dim 1)", dim=u.dim)
    items = {n[0]: v for n, v in u.items()}
    for n in items:
        if n < 0:
            raise domain_error(f"function on Z+ has support at {n}", n=n)
    top = max(items, default=-1) + 1
    out = np.zeros(max(top, length))
    for n, v in items.items():
        out[n] = abs(v)
    return out


def decreasing_rearrange(u: SparseLatticeFunction) -> SparseLatticeFunction:
    """Sort |u| descending onto 0, 1, 2, ...; ties keep their original order."""
    values = half_line_moduli(u)
    order = np.argsort(-values, kind="stable")
    return SparseLatticeFunction.from_sequence(list(values[order]))


def level_set_sizes(u: SparseLatticeFunction, thresholds: Sequence[float]) -> List[int]:
    """#{n : |u(n)| > t} for each t."""
    values = half_line_moduli(u)
    return [int(np.count_nonzero(values > t)) for t in thresholds]


@dataclass
class RearrangementReport:
    """A functional of u next to the same functional of its rearrangement."""
    name: str
    original: float
    rearranged: float
    holds: bool
    equality: bool = False
    notes: List[str] = field(default_factory=list)


def _weight_values(w: Weight, length: int) -> np.ndarray:
    if callable(w):
        return np.array([float(w(n)) for n in range(length)])
    values = np.asarray(list(w), dtype=float)
    if len(values) < length:
        # a finite sequence is extended by its last value
        values = np.concatenate([values, np.full(length - len(values), values[-1] if len(values) else 0.0)])
    return values[:length]


def weighted_forward_energy(values: np.ndarray, weights: np.ndarray, p: float) -> float:
    """sum_n |v(n) - v(n+1)|^p w(n) with v = 0 past the array."""
    ext = np.concatenate([values, [0.0]])
    return float(np.sum(np.abs(ext[:-1] - ext[1:]) ** p * weights))


def weighted_ps_check(u: SparseLatticeFunction, w: Weight, p: float = 2.0) -> RearrangementReport:
    """
    sum |u(n) - u(n+1)|^p w(n) >= sum |u~(n) - u~(n+1)|^p w(n)
    for w >= 0 nondecreasing and p >= 1.

    Equality with min w > 0 forces |u| = u~; holds is False if that fails.
    """
    if p < 1:
        raise domain_error("p must be >= 1", p=p)
    values = half_line_moduli(u)
    length = len(values)
    weights = _weight_values(w, length + 1)
    if np.any(weights < 0):
        raise precondition_error("weight must be non-negative")
    if np.any(np.diff(weights) < 0):
        raise precondition_error("weight must be nondecreasing")
    weights = weights[:length]

    rearranged = half_line_moduli(decreasing_rearrange(u), length)
    signed = np.zeros(length, dtype=complex)
    for n, v in u.items():
        signed[n[0]] = v
    original = weighted_forward_energy(signed, weights, p)
    after = weighted_forward_energy(rearranged, weights, p)

    scale = max(1.0, abs(original))
    holds = original >= after - INEQUALITY_SLACK * scale
    equality = abs(original - after) <= IDENTITY_RTOL * scale
    notes = []
    if equality and length and weights.min() > 0:
        if not np.allclose(values, rearranged, rtol=0, atol=IDENTITY_RTOL * max(1.0, values.max())):
            holds = False
            notes.append("equality without |u| = u~")
    return RearrangementReport("weighted_polya_szego", original, after, holds, equality, notes)


def hardy_littlewood_check(u: SparseLatticeFunction, v: SparseLatticeFunction) -> RearrangementReport:
    """sum u v <= sum u~ v~ for non-negative u, v."""
    for f in (u, v):
        if any(not isinstance(val, (int, float)) or val < 0 for _, val in f.items()):
            raise precondition_error("Hardy-Littlewood needs non-negative real functions")
    a = half_line_moduli(u)
    b = half_line_moduli(v)
    length = max(len(a), len(b))
    a = np.pad(a, (0, length - len(a)))
    b = np.pad(b, (0, length - len(b)))
    a_sorted = np.sort(a)[::-1]
    b_sorted = np.sort(b)[::-1]
    original = float(np.dot(a, b))
    after = float(np.dot(a_sorted, b_sorted))
    scale = max(1.0, after)
    return RearrangementReport(
        "hardy_littlewood",
        original,
        after,
        original <= after + INEQUALITY_SLACK * scale,
        abs(original - after) <= IDENTITY_RTOL * scale,
    )


def contraction_check(u: SparseLatticeFunction, v: SparseLatticeFunction, p: float = 2.0) -> RearrangementReport:
    """||u~ - v~||_p <= ||u - v||_p."""
    if p < 1:
        raise domain_error("p must be >= 1", p=p)
    diff = u - v
    original = float(np.sum(np.abs(diff.values_array()) ** p) ** (1 / p)) if not diff.is_zero() else 0.0
    a = half_line_moduli(decreasing_rearrange(u))
    b = half_line_moduli(decreasing_rearrange(v))
    length = max(len(a), len(b))
    a = np.pad(a, (0, length - len(a)))
    b = np.pad(b, (0, length - len(b)))
    after = float(np.sum(np.abs(a - b) ** p) ** (1 / p))
    scale = max(1.0, original)
    return RearrangementReport(
        "contraction",
        original,
        after,
        after <= original + INEQUALITY_SLACK * scale,
        abs(original - after) <= IDENTITY_RTOL * scale,
    )


def order_preservation_check(u: SparseLatticeFunction, v: SparseLatticeFunction) -> bool:
    """0 <= u <= v pointwise implies u~ <= v~."""
    a = half_line_moduli(u)
    b = half_line_moduli(v)
    length = max(len(a), len(b))
    a = np.pad(a, (0, length - len(a)))
    b = np.pad(b, (0, length - len(b)))
    if np.any(a > b):
        raise precondition_error("order preservation needs |u| <= |v| pointwise")
    return bool(np.all(np.sort(a)[::-1] <= np.sort(b)[::-1]))


@dataclass
class SecondOrderCounterexample:
    alpha: float
    delta: float
    original: float
    rearranged: float
    closed_form: float

    @property
    def rearranged_larger(self) -> bool:
        return self.rearranged > self.original


def second_order_counterexample(alpha: float, delta: float) -> SecondOrderCounterexample:
    """
    u = (alpha, alpha + delta, alpha) on Z+: sum |Delta u|^2 = alpha^2 + 5 delta^2 + (alpha - delta)^2,
    while u~ gives 2(alpha^2 + delta^2), which is larger for delta < alpha / 2.
    """
    if alpha <= 0 or not 0 < delta <= alpha / 2:
        raise domain_error("need alpha > 0 and 0 < delta <= alpha/2", alpha=alpha, delta=delta)
    u = np.array([alpha, alpha + delta, alpha, 0.0])
    rearranged = np.sort(u)[::-1]
    original = float(np.sum(half_line_laplacian(u) ** 2))
    after = float(np.sum(half_line_laplacian(rearranged) ** 2))
    return SecondOrderCounterexample(
        alpha, delta, original, after, alpha ** 2 + 5 * delta ** 2 + (alpha - delta) ** 2
    )


# -------------------------
# HARDY VIA REARRANGEMENT
# -------------------------

@dataclass
class InterpolationSums:
    """Sums over Z+ next to the integrals of the piecewise-linear interpolation Lu."""
    mass_sum: float
    mass_integral: float
    energy_sum: float
    energy_integral: float

    @property
    def ordered(self) -> bool:
        """mass_sum <= mass_integral and energy_sum >= energy_integral."""
        tol = INEQUALITY_SLACK * max(1.0, self.mass_integral, self.energy_sum)
        return self.mass_sum <= self.mass_integral + tol and self.energy_sum >= self.energy_integral - tol


def interpolation_sums(values: np.ndarray, alpha: float) -> InterpolationSums:
    """
    For decreasing values v(0), v(1), ...: sum_{n>=1} v(n)^2 n^(alpha-2) against
    int_0^inf |Lv|^2 x^(alpha-2), and sum_{n>=1} |v(n) - v(n-1)|^2 n^alpha against
    int_0^inf |(Lv)'|^2 x^alpha, with Lv linear on every [n-1, n].
    """
    ext = np.concatenate([values, [0.0]])
    n = np.arange(1, len(ext))
    mass_sum = float(np.sum(ext[1:] ** 2 * n ** (alpha - 2)))
    jumps = ext[1:] - ext[:-1]
    energy_sum = float(np.sum(jumps ** 2 * n ** alpha))
    energy_integral = float(np.sum(jumps ** 2 * (n ** (alpha + 1) - (n - 1) ** (alpha + 1)) / (alpha + 1)))

    mass_integral = 0.0
    for k in n:
        a, b = ext[k - 1], ext[k]
        if a == 0 and b == 0:
            continue

        def sq(x, a=a, b=b, k=k):
            return (b + (x - k) * (b - a)) ** 2

        if k == 1:
            # x^(alpha-2) is singular at 0 when alpha < 2
            value, _ = integrate.quad(sq, 0.0, 1.0, weight="alg", wvar=(alpha - 2, 0.0))
        else:
            value, _ = integrate.quad(lambda x: sq(x) * x ** (alpha - 2), k - 1, k)
        mass_integral += value
    return InterpolationSums(mass_sum, mass_integral, energy_sum, energy_integral)


def hardy_via_rearrangement(u: SparseLatticeFunction, alpha: float) -> QuotientReport:
    """
    sum_{n>=1} |u(n) - u(n-1)|^2 n^alpha >= ((alpha-1)^2/4) sum_{n>=1} |u|^2 n^(alpha-2)
    for 1 < alpha <= 2 and |u(0)| = max |u|.

    The interpolation sums of u~ are attached as notes.
    """
    if not 1 < alpha <= 2:
        raise domain_error("alpha must lie in (1, 2]", alpha=alpha)
    moduli = half_line_moduli(u)
    if len(moduli) == 0:
        raise domain_error("u vanishes identically")
    if moduli[0] < moduli.max():
        raise precondition_error("|u| must be maximal at the origin", u0=float(moduli[0]))

    signed = np.zeros(len(moduli) + 1, dtype=complex)
    for n, v in u.items():
        signed[n[0]] = v
    idx = np.arange(1, len(signed))
    lhs = float(np.sum(np.abs(signed[1:] - signed[:-1]) ** 2 * idx ** alpha))
    rhs = float(np.sum(np.abs(signed[1:]) ** 2 * idx ** (alpha - 2)))

    sums = interpolation_sums(np.sort(moduli)[::-1], alpha)
    notes = [
        f"interpolation mass {sums.mass_sum:.6e} <= {sums.mass_integral:.6e}",
        f"interpolation energy {sums.energy_sum:.6e} >= {sums.energy_integral:.6e}",
    ]
    return QuotientReport.build("hardy_via_rearrangement", lhs, rhs, (alpha - 1) ** 2 / 4, notes=notes)


def rearrangement_summary(u: SparseLatticeFunction) -> Dict[str, float]:
    """l^p norms of u and u~ for p = 1, 2, 3."""
    a = half_line_moduli(u)
    b = half_line_moduli(decreasing_rearrange(u))
    out: Dict[str, float] = {}
    for p in (1, 2, 3):
        out[f"l{p}"] = float(np.sum(a ** p) ** (1 / p))
        out[f"l{p}_rearranged"] = float(np.sum(b ** p) ** (1 / p))
    return out

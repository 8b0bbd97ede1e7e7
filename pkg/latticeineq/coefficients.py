"""
Exact coefficient families of the Fourier-side Hardy inequalities.

All values are fractions.Fraction; floats only appear where an inequality is
evaluated on data.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Dict, List, Optional, Tuple

from .errors import domain_error

logger = logging.getLogger(__name__)


def binom(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 for k < 0 or k > n >= 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _check_index(i: int, k: int, lowest: int = 0) -> None:
    if k < 1 or not lowest <= i <= k:
        raise domain_error(f"index out of range: i={i}, k={k}", i=i, k=k)


def coeff_xi(i: int, k: int) -> Fraction:
    """
    xi_i^k = sum over 0 <= m <= min(i, k-i), 1 <= n <= k-i of
    (-1)^n 2^(n-m) C(k+1, i-m) C(k, i+n) C(n-1, m).
    """
    _check_index(i, k)
    total = Fraction(0)
    for m in range(0, min(i, k - i) + 1):
        for n in range(1, k - i + 1):
            term = binom(k + 1, i - m) * binom(k, i + n) * binom(n - 1, m)
            if term:
                total += (-1) ** n * Fraction(2) ** (n - m) * term
    return total


def xi_closed_form(i: int, k: int) -> Fraction:
    """(-1)^(k-i) C(k,i) - C(k,i)^2."""
    c = binom(k, i)
    return Fraction((-1) ** (k - i) * c - c * c)


@dataclass(frozen=True)
class CoefficientRow:
    """alpha_i^k, beta_i^k (raw and simplified) and gamma_i^k for one (i, k)."""
    i: int
    k: int
    xi: Fraction
    alpha: Fraction
    beta: Fraction
    alpha_simplified: Fraction
    beta_simplified: Fraction
    gamma: Optional[Fraction]
    gamma_simplified: Optional[Fraction]

    @property
    def consistent(self) -> bool:
        return (
            self.alpha == self.alpha_simplified
            and self.beta == self.beta_simplified
            and self.gamma == self.gamma_simplified
        )


def alpha_raw(i: int, k: int) -> Fraction:
    sign = (-1) ** (k - i)
    c = binom(k, i)
    value = Fraction(binom(2 * k, 2 * i), 2) - Fraction(sign * c * c, 2) - sign * coeff_xi(i, k) / 2
    return value / Fraction(4) ** (k - i)


def beta_raw(i: int, k: int) -> Fraction:
    sign = (-1) ** (k - i)
    c = binom(k, i)
    return (sign * coeff_xi(i, k) + sign * c * c) / Fraction(4) ** (k - i)


def alpha_simplified(i: int, k: int) -> Fraction:
    return (Fraction(binom(2 * k, 2 * i), 2) - Fraction(binom(k, i), 2)) / Fraction(4) ** (k - i)


def beta_simplified(i: int, k: int) -> Fraction:
    return Fraction(binom(k, i)) / Fraction(4) ** (k - i)


def gamma_simplified(i: int, k: int) -> Fraction:
    """4^i gamma_i^k = 2 C(2k,2i) - 2 C(k,i) + C(k,i-1)."""
    _check_index(i, k, lowest=1)
    return Fraction(2 * binom(2 * k, 2 * i) - 2 * binom(k, i) + binom(k, i - 1)) / Fraction(4) ** i


def gamma_raw(i: int, k: int) -> Fraction:
    """gamma_i^k assembled from the raw torus coefficients: 4 alpha_{k-i}^k + beta_{k-i+1}^k / 4."""
    _check_index(i, k, lowest=1)
    return 4 * alpha_raw(k - i, k) + beta_raw(k - i + 1, k) / 4


def coeff_alpha_beta_gamma(i: int, k: int) -> CoefficientRow:
    _check_index(i, k)
    return CoefficientRow(
        i=i,
        k=k,
        xi=coeff_xi(i, k),
        alpha=alpha_raw(i, k),
        beta=beta_raw(i, k),
        alpha_simplified=alpha_simplified(i, k),
        beta_simplified=beta_simplified(i, k),
        gamma=gamma_raw(i, k) if i >= 1 else None,
        gamma_simplified=gamma_simplified(i, k) if i >= 1 else None,
    )


@dataclass
class IdentityReport:
    k_max: int
    holds: bool
    checked: int
    first_failure: Optional[Tuple[int, int]] = None


def combinatorial_identity_check(k_max: int) -> IdentityReport:
    """xi_i^k == (-1)^(k-i) C(k,i) - C(k,i)^2 for every 1 <= k <= k_max, 0 <= i <= k."""
    if k_max < 1:
        raise domain_error("k_max must be >= 1", k_max=k_max)
    checked = 0
    for k in range(1, k_max + 1):
        for i in range(0, k + 1):
            checked += 1
            if coeff_xi(i, k) != xi_closed_form(i, k):
                logger.warning(f"identity fails at k={k}, i={i}")
                return IdentityReport(k_max, False, checked, (k, i))
    logger.info(f"combinatorial identity verified for k <= {k_max} ({checked} pairs)")
    return IdentityReport(k_max, True, checked)


def coefficient_table(k_max: int) -> List[CoefficientRow]:
    """Rows (k, i) for 1 <= k <= k_max, 0 <= i <= k."""
    return [coeff_alpha_beta_gamma(i, k) for k in range(1, k_max + 1) for i in range(k + 1)]


# -------------------------
# HIGHER-ORDER CONSTANTS
# -------------------------

def weight_chain_constant(k: int) -> Fraction:
    """C(k) = k(k-1)(k-3/2)^2."""
    k_ = Fraction(k)
    return k_ * (k_ - 1) * (k_ - Fraction(3, 2)) ** 2


def weight_chain_from_tables(k: int) -> Fraction:
    """16 alpha_{k-1}^k (alpha_{k-2}^{k-1} + beta_{k-1}^{k-1} / 16), from the raw coefficients."""
    if k < 2:
        raise domain_error("chain needs k >= 2", k=k)
    return 16 * alpha_raw(k - 1, k) * (alpha_raw(k - 2, k - 1) + beta_raw(k - 1, k - 1) / 16)


HIGHER_ORDER_FAMILIES = ("laplacian", "grad_laplacian", "weighted_laplacian", "weighted_grad_laplacian")


def higher_order_constant(m: int, family: str, k: Optional[int] = None) -> Fraction:
    """
    Explicit constants of the higher-order discrete Hardy / Rellich inequalities.

    family:
        laplacian                - |Delta^m u|^2 on N_0 against n^(-4m)
        grad_laplacian           - |D Delta^m u|^2 on N_0 against n^(-4m-2)
        weighted_laplacian       - |Delta^m u|^2 n^(2k) on Z, k >= 2m
        weighted_grad_laplacian  - |D Delta^m u|^2 (n-1/2)^(2k) on Z, k >= 2m+1
    """
    if m < 1:
        raise domain_error("m must be >= 1", m=m)
    if family == "laplacian":
        return Fraction(prod(8 * m - 3 - 4 * i for i in range(2 * m)), 2 ** (4 * m))
    if family == "grad_laplacian":
        return Fraction(prod(8 * m + 1 - 4 * i for i in range(2 * m + 1)), 2 ** (4 * m + 2))
    if family == "weighted_laplacian":
        if k is None or k < 2 * m:
            raise domain_error("weighted_laplacian needs k >= 2m", m=m, k=k)
        return prod((weight_chain_constant(k - 2 * i) for i in range(m)), start=Fraction(1))
    if family == "weighted_grad_laplacian":
        if k is None or k < 2 * m + 1:
            raise domain_error("weighted_grad_laplacian needs k >= 2m+1", m=m, k=k)
        head = Fraction((2 * k - 1) ** 2, 4)
        return head * prod((weight_chain_constant(k - 1 - 2 * i) for i in range(m)), start=Fraction(1))
    raise domain_error(f"Unknown family: {family}. Available: {list(HIGHER_ORDER_FAMILIES)}")


def improved_hardy_coefficients(k: int) -> Dict[int, Fraction]:
    """gamma_i^k for 1 <= i <= k."""
    if k < 1:
        raise domain_error("k must be >= 1", k=k)
    return {i: gamma_simplified(i, k) for i in range(1, k + 1)}


def improved_hardy_tail(k: int) -> Fraction:
    """Coefficient 2^(-2k-2) of the sum |u|^2 / n^2 remainder."""
    return Fraction(1, 2 ** (2 * k + 2))

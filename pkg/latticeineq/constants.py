"""
Explicit constants of the torus Hardy, Hardy-Rellich and Rellich inequalities
and the lattice bounds they imply in dimension d.

k is a non-positive integer throughout (the power of omega in the weight).
"""
from __future__ import annotations

import math
from typing import Callable, Dict, List, Optional

from .errors import InequalityError, domain_error

CONSTANT_NAMES = ("H", "HR", "R", "C", "C_tilde", "C1_upper", "C2_upper", "C1_lower", "C2_lower")


def _require(condition: bool, constraint: str, **context) -> None:
    if not condition:
        raise domain_error(f"constraint violated: {constraint}", **context)


def _chain_inverse(k: int, d: int, c1: Callable[[int], float], c2: Callable[[int], float]) -> float:
    """sum_{j=0}^{-k} d^j c1(k+j) prod_{i<j} c2(k+i) + d^(-k) prod_{i=0}^{-k} c2(k+i)."""
    total = 0.0
    running = 1.0
    for j in range(0, -k + 1):
        total += d ** j * c1(k + j) * running
        running *= c2(k + j)
    return total + d ** (-k) * running


def _hardy_inverse(k: int, d: int) -> float:
    return _chain_inverse(
        k,
        d,
        lambda a: 16.0 / (d + 2 * a - 2) ** 2,
        lambda a: (3 * d + 2 * a - 2) / (d * (d + 2 * a - 2)),
    )


def _hardy_rellich_inverse(k: int, d: int) -> float:
    return _chain_inverse(
        k,
        d,
        lambda a: 16.0 / (d - 2 * a) ** 2,
        lambda a: (3 * d - 2 * a + 4) / (d * (d - 2 * a)),
    )


def _check_k(k: int) -> None:
    _require(k <= 0, "k <= 0", k=k)


def hardy_constant(k: int, d: int) -> float:
    """H(k, d), valid for d > -2k + 2."""
    _check_k(k)
    _require(d > -2 * k + 2, "d > -2k + 2", k=k, d=d)
    return 1.0 / _hardy_inverse(k, d)


def hardy_rellich_constant(k: int, d: int) -> float:
    """HR(k, d), valid for d >= -6k + 8."""
    _check_k(k)
    _require(d >= -6 * k + 8, "d >= -6k + 8", k=k, d=d)
    return 1.0 / _hardy_rellich_inverse(k, d)


def _rellich_parameters(alpha: float, d: int) -> Dict[str, float]:
    beta = (-4 + 8 * alpha + math.sqrt(2) * math.sqrt(d * d - 4 * d + 16 * alpha ** 2 - 16 * alpha + 8)) / 8
    c1 = 2 * beta * (d - 2 * beta + 2 * alpha - 1) / d
    c2 = beta * (d + 4 * beta - 4 * alpha) * (d + 2 * alpha - 2) * (2 * beta - 2 * alpha + 1) / (2 * d)
    return {"beta": beta, "c1": c1, "c2": c2}


def rellich_constant(k: int, d: int) -> float:
    """
    R(k, d) = (d-2k)^2 (d+2k-4)^2 / (256 (1 + HR^{-1} (d C1(k/2) + d C2(k/2) H^{-1}))),
    valid for d > -2k + 4. HR and H enter through their inverses as written.
    """
    _check_k(k)
    _require(d > -2 * k + 4, "d > -2k + 4", k=k, d=d)
    params = _rellich_parameters(k / 2, d)
    inner = d * params["c1"] + d * params["c2"] * _hardy_inverse(k, d)
    denominator = 256 * (1 + _hardy_rellich_inverse(k, d) * inner)
    return (d - 2 * k) ** 2 * (d + 2 * k - 4) ** 2 / denominator


def iterated_rellich_constant(m: int, k: int, d: int) -> float:
    """C(m, k, d) = prod_{i<m} R(k - 2i, d), valid for d > -2k + 4m."""
    _check_k(k)
    _require(m >= 0, "m >= 0", m=m)
    _require(d > -2 * k + 4 * m, "d > -2k + 4m", m=m, k=k, d=d)
    return math.prod(rellich_constant(k - 2 * i, d) for i in range(m))


def iterated_hardy_constant(m: int, k: int, d: int) -> float:
    """C~(m, k, d) = H(k, d) prod_{i<m} R(k - 2i - 1, d), valid for d > -2k + 4m + 2."""
    _check_k(k)
    _require(m >= 0, "m >= 0", m=m)
    _require(d > -2 * k + 4 * m + 2, "d > -2k + 4m + 2", m=m, k=k, d=d)
    return hardy_constant(k, d) * math.prod(rellich_constant(k - 2 * i - 1, d) for i in range(m))


def explicit_constant(name: str, k: int, d: int, m: Optional[int] = None) -> float:
    """
    Named constant lookup.

    H, HR, R              torus constants at (k, d), k <= 0
    C, C_tilde            iterated constants at (m, k, d)
    C1_upper, C2_upper    lattice upper bounds 4^(2k+1) d^(2k+1), 4^(2k) d^(2k), k >= 0
    C1_lower, C2_lower    lattice lower bounds 4^(2k+1) C~(k, 0, d), 4^(2k) C(k, 0, d), k >= 0
    """
    if name == "H":
        return hardy_constant(k, d)
    if name == "HR":
        return hardy_rellich_constant(k, d)
    if name == "R":
        return rellich_constant(k, d)
    if name in ("C", "C_tilde"):
        if m is None:
            raise domain_error(f"{name} needs m")
        fn = iterated_rellich_constant if name == "C" else iterated_hardy_constant
        return fn(m, k, d)
    if name in ("C1_upper", "C2_upper", "C1_lower", "C2_lower"):
        _require(k >= 0, "k >= 0 for lattice bounds", k=k)
        _require(d >= 1, "d >= 1", d=d)
        if name == "C1_upper":
            return 4.0 ** (2 * k + 1) * float(d) ** (2 * k + 1)
        if name == "C2_upper":
            return 4.0 ** (2 * k) * float(d) ** (2 * k)
        if name == "C1_lower":
            return 4.0 ** (2 * k + 1) * iterated_hardy_constant(k, 0, d)
        return 4.0 ** (2 * k) * iterated_rellich_constant(k, 0, d)
    raise domain_error(f"Unknown constant: {name}. Available: {list(CONSTANT_NAMES)}")


def constant_table(d_values: List[int], k: int = 0) -> List[Dict[str, float]]:
    """Rows (d, k, H, HR, R, C, C_tilde) with m = 1; entries outside a range are None."""
    rows = []
    for d in d_values:
        row: Dict[str, float] = {"d": d, "k": k}
        for name, kwargs in (
            ("H", {}),
            ("HR", {}),
            ("R", {}),
            ("C", {"m": 1}),
            ("C_tilde", {"m": 1}),
        ):
            try:
                row[name] = explicit_constant(name, k, d, **kwargs)
            except InequalityError:
                row[name] = None  # type: ignore[assignment]
        rows.append(row)
    return rows

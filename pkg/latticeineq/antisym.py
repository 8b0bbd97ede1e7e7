"""
Antisymmetric functions on Z^d and their Hardy constants.
"""
from __future__ import annotations

import itertools
import math
from typing import Tuple

from .errors import domain_error, precondition_error
from .lattice import Point, SparseLatticeFunction, grad_energy, norm_inf, norm_sq
from .reports import QuotientReport

ANTISYM_2D_CONSTANT = 4 * math.sin(math.pi / 8) ** 2  # = 2 - sqrt(2)


def permutation_sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def is_antisymmetric(u: SparseLatticeFunction, tol: float = 0.0) -> bool:
    """u(n with n_i, n_j swapped) = -u(n) for every pair i < j."""
    for n, v in u.items():
        for i in range(u.dim):
            for j in range(i + 1, u.dim):
                swapped = list(n)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                if abs(u.get(tuple(swapped)) + v) > tol:
                    return False
    return True


def antisymmetrize(u: SparseLatticeFunction) -> SparseLatticeFunction:
    """(1/d!) sum over permutations sigma of sign(sigma) u(sigma n)."""
    perms = list(itertools.permutations(range(u.dim)))
    out = {}
    for n, v in u.items():
        for perm in perms:
            target = tuple(n[p] for p in perm)
            out[target] = out.get(target, 0.0) + permutation_sign(perm) * v / len(perms)
    cleaned = {k: val for k, val in out.items() if abs(val) > 1e-15}
    return SparseLatticeFunction(u.dim, cleaned)


def cp_constant(d: int) -> int:
    """N(N-1)(2N-1)/3 + (3 - (-1)^d) N^2 / 2 with N = floor(d/2)."""
    if d < 2:
        raise domain_error("C_p needs d >= 2", d=d)
    n = d // 2
    return n * (n - 1) * (2 * n - 1) // 3 + (3 - (-1) ** d) * n * n // 2


def minimal_distinct_vector(d: int) -> Point:
    """An integer vector with pairwise distinct coordinates and least |n|^2."""
    if d < 2:
        raise domain_error("needs d >= 2", d=d)
    best = min(itertools.combinations(range(-d, d + 1), d), key=lambda c: sum(x * x for x in c))
    return tuple(best)


def cp_brute(d: int) -> int:
    return norm_sq(minimal_distinct_vector(d))


def antisym_constant_nd(d: int) -> float:
    """4d(d-2)^2 C_p / (16 d C_p + (3d-2)(d-2)) for d >= 3."""
    if d < 3:
        raise domain_error("needs d >= 3", d=d)
    cp = cp_constant(d)
    return 4 * d * (d - 2) ** 2 * cp / (16 * d * cp + (3 * d - 2) * (d - 2))


def antisym_torus_constant(d: int) -> float:
    """Torus version of the antisymmetric Hardy constant (a quarter of the lattice one)."""
    return antisym_constant_nd(d) / 4


def antisym_hardy_quotient(u: SparseLatticeFunction, weight: str = "linf") -> QuotientReport:
    """
    Antisymmetric Hardy quotient.

    d = 2: against 4 sin^2(pi/8) sum |u|^2 / ||n||^2, with ||n|| the l^inf norm
    (weight="linf") or the Euclidean norm (weight="l2", a weaker right-hand side).
    d >= 3: against the C_p-based constant with sum |u|^2 / |n|^2.
    """
    if not is_antisymmetric(u, tol=1e-12):
        raise precondition_error("u is not antisymmetric")
    if u.is_zero():
        raise domain_error("u vanishes identically")
    lhs = grad_energy(u, 2.0)
    if u.dim == 2:
        if weight not in ("linf", "l2"):
            raise domain_error(f"Unknown weight: {weight}. Available: ['linf', 'l2']")
        norm = (lambda n: norm_inf(n) ** 2) if weight == "linf" else norm_sq
        rhs = sum(abs(v) ** 2 / norm(n) for n, v in u.items())
        return QuotientReport.build(f"antisym_hardy_2d_{weight}", lhs, rhs, ANTISYM_2D_CONSTANT)
    if u.dim < 2:
        raise domain_error("antisymmetry needs d >= 2", dim=u.dim)
    rhs = sum(abs(v) ** 2 / norm_sq(n) for n, v in u.items())
    return QuotientReport.build("antisym_hardy_nd", lhs, rhs, antisym_constant_nd(u.dim))


def antisym_rayleigh_bracket(d: int) -> QuotientReport:
    """
    Quotient of the antisymmetrized delta at a minimal distinct-coordinate vector.

    Every lattice neighbour of the sphere |n|^2 = C_p leaves the support, so the
    quotient equals 2d C_p: an upper bracket for the sharp constant.
    """
    u = antisymmetrize(SparseLatticeFunction.delta(minimal_distinct_vector(d)))
    lhs = grad_energy(u, 2.0)
    rhs = sum(abs(v) ** 2 / norm_sq(n) for n, v in u.items())
    constant = ANTISYM_2D_CONSTANT if d == 2 else antisym_constant_nd(d)
    report = QuotientReport.build("antisym_rayleigh_bracket", lhs, rhs, constant)
    report.notes.append(f"expected ratio 2d*C_p = {2 * d * cp_constant(d)}")
    return report

"""
Trigonometric polynomials on the torus (-pi, pi)^d.

A TrigPolynomial is a finite sum of c_q exp(i q.x) with rational frequency
vectors q, so half-integer factors such as sin(x/2) stay representable.
Integrals are available in closed form and by the midpoint rule, which is
exact for integer frequencies below the grid size.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

from .config import QUADRATURE_GUARD
from .errors import domain_error

Frequency = Tuple[Fraction, ...]


def _freq(q: Iterable) -> Frequency:
    return tuple(Fraction(c) for c in q)


def quadrature_grid_size(bandwidth: float, guard: int = QUADRATURE_GUARD) -> int:
    """Smallest power of two exceeding 2 * bandwidth + guard."""
    target = 2 * bandwidth + guard
    m = 2
    while m <= target:
        m *= 2
    return m


def midpoints(size: int) -> np.ndarray:
    """x_j = -pi + (j + 1/2) 2pi / size."""
    if size < 2 or size % 2:
        raise domain_error(f"grid size must be even and >= 2, got {size}", size=size)
    return -np.pi + (np.arange(size) + 0.5) * (2 * np.pi / size)


def midpoint_mesh(size: int, dim: int) -> Tuple[np.ndarray, ...]:
    axis = midpoints(size)
    return tuple(np.meshgrid(*([axis] * dim), indexing="ij"))


class TrigPolynomial:
    """Finite Fourier sum on (-pi, pi)^d; immutable."""

    __slots__ = ("_dim", "_coeffs")

    def __init__(self, dim: int, coeffs: Optional[Mapping[Iterable, complex]] = None):
        if dim < 1:
            raise domain_error("dimension must be >= 1", dim=dim)
        self._dim = dim
        cleaned: Dict[Frequency, complex] = {}
        for q, c in (coeffs or {}).items():
            key = _freq(q)
            if len(key) != dim:
                raise domain_error(f"frequency {q} does not have dimension {dim}")
            value = complex(c)
            if value != 0:
                cleaned[key] = cleaned.get(key, 0) + value
        self._coeffs = {q: c for q, c in cleaned.items() if c != 0}

    # --- constructors ---

    @classmethod
    def exponential(cls, q: Iterable, coeff: complex = 1.0) -> "TrigPolynomial":
        key = _freq(q)
        return cls(len(key), {key: coeff})

    @classmethod
    def constant(cls, dim: int, value: complex) -> "TrigPolynomial":
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def sin_half(cls, dim: int = 1, axis: int = 0) -> "TrigPolynomial":
        """sin(x_axis / 2)."""
        plus = [Fraction(0)] * dim
        minus = [Fraction(0)] * dim
        plus[axis] = Fraction(1, 2)
        minus[axis] = Fraction(-1, 2)
        return cls(dim, {tuple(plus): -0.5j, tuple(minus): 0.5j})

    @classmethod
    def cos(cls, dim: int = 1, axis: int = 0) -> "TrigPolynomial":
        plus = [0] * dim
        minus = [0] * dim
        plus[axis] = 1
        minus[axis] = -1
        return cls(dim, {tuple(plus): 0.5, tuple(minus): 0.5})

    @classmethod
    def omega(cls, dim: int) -> "TrigPolynomial":
        """omega(x) = sum_j sin^2(x_j / 2) = d/2 - (1/2) sum_j cos x_j."""
        out = cls.constant(dim, dim / 2)
        for j in range(dim):
            out = out + cls.cos(dim, j).scale(-0.5)
        return out

    # --- accessors ---

    @property
    def dim(self) -> int:
        return self._dim

    def items(self):
        return sorted(self._coeffs.items())

    def coefficient(self, q: Iterable) -> complex:
        return self._coeffs.get(_freq(q), 0j)

    def is_zero(self) -> bool:
        return not self._coeffs

    def bandwidth(self) -> float:
        """max |q_j| over all frequencies and axes."""
        return float(max((abs(c) for q in self._coeffs for c in q), default=0))

    def has_integer_frequencies(self) -> bool:
        return all(c.denominator == 1 for q in self._coeffs for c in q)

    def is_real(self, tol: float = 0.0) -> bool:
        """Conjugate symmetry c_{-q} = conj(c_q)."""
        for q, c in self._coeffs.items():
            other = self._coeffs.get(tuple(-x for x in q), 0j)
            if abs(other - c.conjugate()) > tol:
                return False
        return True

    # --- algebra ---

    def __add__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        self._check_dim(other)
        out = dict(self._coeffs)
        for q, c in other._coeffs.items():
            out[q] = out.get(q, 0) + c
        return TrigPolynomial(self._dim, out)

    def __sub__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        self._check_dim(other)
        out: Dict[Frequency, complex] = {}
        for q1, c1 in self._coeffs.items():
            for q2, c2 in other._coeffs.items():
                q = tuple(a + b for a, b in zip(q1, q2))
                out[q] = out.get(q, 0) + c1 * c2
        return TrigPolynomial(self._dim, out)

    def __pow__(self, n: int) -> "TrigPolynomial":
        if n < 0:
            raise domain_error("negative powers are not trigonometric polynomials")
        out = TrigPolynomial.constant(self._dim, 1.0)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, factor: complex) -> "TrigPolynomial":
        return TrigPolynomial(self._dim, {q: c * factor for q, c in self._coeffs.items()})

    def conj(self) -> "TrigPolynomial":
        return TrigPolynomial(
            self._dim, {tuple(-x for x in q): c.conjugate() for q, c in self._coeffs.items()}
        )

    def derivative(self, axis: int = 0, order: int = 1) -> "TrigPolynomial":
        """d^order / dx_axis^order."""
        if order < 0:
            raise domain_error("derivative order must be >= 0")
        return TrigPolynomial(
            self._dim,
            {q: c * (1j * float(q[axis])) ** order for q, c in self._coeffs.items()},
        )

    def laplacian(self) -> "TrigPolynomial":
        """Continuous Laplacian sum_j d^2/dx_j^2."""
        return TrigPolynomial(
            self._dim,
            {q: -c * float(sum(x * x for x in q)) for q, c in self._coeffs.items()},
        )

    def abs_sq(self) -> "TrigPolynomial":
        return self * self.conj()

    def _check_dim(self, other: "TrigPolynomial") -> None:
        if other._dim != self._dim:
            raise domain_error("dimension mismatch", left=self._dim, right=other._dim)

    # --- evaluation and integration ---

    def evaluate(self, *coords: np.ndarray) -> np.ndarray:
        if len(coords) != self._dim:
            raise domain_error(f"expected {self._dim} coordinate arrays")
        out = np.zeros(np.broadcast(*coords).shape, dtype=complex)
        for q, c in self._coeffs.items():
            phase = sum(float(qj) * x for qj, x in zip(q, coords))
            out = out + c * np.exp(1j * phase)
        return out

    def integral(self) -> complex:
        """Closed-form integral over (-pi, pi)^d."""
        total = 0j
        for q, c in self._coeffs.items():
            term = c
            for qj in q:
                if qj == 0:
                    term *= 2 * math.pi
                elif qj.denominator == 1:
                    term = 0
                    break
                else:
                    term *= 2 * math.sin(math.pi * float(qj)) / float(qj)
            total += term
        return total

    def quadrature(self, size: Optional[int] = None) -> complex:
        """Midpoint rule on size^d points; exact for integer frequencies below size."""
        if size is None:
            size = quadrature_grid_size(self.bandwidth())
        mesh = midpoint_mesh(size, self._dim)
        cell = (2 * math.pi / size) ** self._dim
        return complex(np.sum(self.evaluate(*mesh)) * cell)

    def average(self) -> complex:
        return self.integral() / (2 * math.pi) ** self._dim

    def __repr__(self) -> str:
        return f"TrigPolynomial(dim={self._dim}, terms={len(self._coeffs)})"

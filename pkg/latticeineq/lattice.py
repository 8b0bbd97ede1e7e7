"""
Lattice-graph primitives on Z^d.

- SparseLatticeFunction: finitely supported function, zero values pruned
- l^p norms of functions and of their gradients (each unordered edge once)
- difference operators D_j, D and the discrete Laplacian
- vertex / edge boundaries and the two coarea decompositions
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

import numpy as np

from .errors import domain_error, precondition_error

Point = Tuple[int, ...]
Edge = Tuple[Point, Point]
Scalar = Union[float, complex]


def as_point(coords: Iterable[Any]) -> Point:
    """Canonical integer-tuple key."""
    return tuple(int(c) for c in coords)


def shift(point: Point, axis: int, step: int) -> Point:
    """point + step * e_axis."""
    return point[:axis] + (point[axis] + step,) + point[axis + 1:]


def neighbors(point: Point) -> Iterator[Point]:
    """The 2d lattice neighbours of a point."""
    for j in range(len(point)):
        yield shift(point, j, 1)
        yield shift(point, j, -1)


def norm_l1(point: Point) -> int:
    return sum(abs(c) for c in point)


def norm_sq(point: Point) -> int:
    return sum(c * c for c in point)


def norm_inf(point: Point) -> int:
    return max((abs(c) for c in point), default=0)


class SparseLatticeFunction:
    """
    Finitely supported real or complex function on Z^d.

    Values that are exactly zero are never stored, so two functions are equal
    iff their value maps are equal. Instances are treated as immutable: every
    operation returns a new function.
    """

    __slots__ = ("_dim", "_values")

    def __init__(self, dim: int, values: Optional[Mapping[Iterable[int], Scalar]] = None):
        if dim < 1:
            raise domain_error("dimension must be >= 1", dim=dim)
        self._dim = int(dim)
        cleaned: Dict[Point, Scalar] = {}
        for coords, value in (values or {}).items():
            key = as_point(coords)
            if len(key) != self._dim:
                raise domain_error(
                    f"point {key} has length {len(key)}, expected {self._dim}",
                    point=list(key),
                )
            if value != 0:
                cleaned[key] = value
        self._values = cleaned

    # --- constructors ---

    @classmethod
    def delta(cls, point: Iterable[int], value: Scalar = 1.0) -> "SparseLatticeFunction":
        key = as_point(point)
        return cls(len(key), {key: value})

    @classmethod
    def from_sequence(cls, values: Sequence[Scalar], start: int = 0) -> "SparseLatticeFunction":
        """One-dimensional function with values[i] at start + i."""
        return cls(1, {(start + i,): v for i, v in enumerate(values)})

    @classmethod
    def from_json(cls, text: str) -> "SparseLatticeFunction":
        data = json.loads(text)
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SparseLatticeFunction":
        dim = int(data["dim"])
        values: Dict[Point, Scalar] = {}
        for coords, raw in data.get("values", []):
            if isinstance(raw, (list, tuple)):
                value: Scalar = complex(float(raw[0]), float(raw[1]))
            else:
                value = float(raw)
            values[as_point(coords)] = value
        return cls(dim, values)

    # --- accessors ---

    @property
    def dim(self) -> int:
        return self._dim

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, point: object) -> bool:
        return point in self._values

    def __getitem__(self, point: Iterable[int]) -> Scalar:
        return self._values.get(as_point(point), 0.0)

    def get(self, point: Point) -> Scalar:
        return self._values.get(point, 0.0)

    def items(self) -> List[Tuple[Point, Scalar]]:
        return sorted(self._values.items())

    def support(self) -> FrozenSet[Point]:
        return frozenset(self._values)

    def values_array(self) -> np.ndarray:
        return np.array([v for _, v in self.items()])

    def is_real(self) -> bool:
        return all(not isinstance(v, complex) or v.imag == 0 for v in self._values.values())

    def is_zero(self) -> bool:
        return not self._values

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseLatticeFunction):
            return NotImplemented
        return self._dim == other._dim and self._values == other._values

    def __hash__(self) -> int:
        return hash((self._dim, frozenset(self._values.items())))

    def __repr__(self) -> str:
        return f"SparseLatticeFunction(dim={self._dim}, values={dict(self.items())!r})"

    # --- algebra ---

    def map_values(self, fn: Callable[[Scalar], Scalar]) -> "SparseLatticeFunction":
        return SparseLatticeFunction(self._dim, {k: fn(v) for k, v in self._values.items()})

    def __add__(self, other: "SparseLatticeFunction") -> "SparseLatticeFunction":
        self._check_dim(other)
        out = dict(self._values)
        for k, v in other._values.items():
            out[k] = out.get(k, 0.0) + v
        return SparseLatticeFunction(self._dim, out)

    def __sub__(self, other: "SparseLatticeFunction") -> "SparseLatticeFunction":
        return self + other.scale(-1.0)

    def scale(self, factor: Scalar) -> "SparseLatticeFunction":
        return self.map_values(lambda v: v * factor)

    def abs(self) -> "SparseLatticeFunction":
        return self.map_values(lambda v: float(abs(v)))

    def translate(self, offset: Iterable[int]) -> "SparseLatticeFunction":
        off = as_point(offset)
        return SparseLatticeFunction(
            self._dim,
            {tuple(a + b for a, b in zip(k, off)): v for k, v in self._values.items()},
        )

    def _check_dim(self, other: "SparseLatticeFunction") -> None:
        if other._dim != self._dim:
            raise domain_error("dimension mismatch", left=self._dim, right=other._dim)

    # --- serialization ---

    def to_dict(self) -> Dict[str, Any]:
        values: List[Any] = []
        for k, v in self.items():
            if isinstance(v, complex):
                values.append([list(k), [v.real, v.imag]])
            else:
                values.append([list(k), float(v)])
        return {"dim": self._dim, "values": values}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -------------------------
# NORMS
# -------------------------

def _check_p(p: float) -> None:
    if not (p == math.inf or p >= 1):
        raise domain_error(f"p must be >= 1 or inf, got {p}", p=p)


def lp_norm(f: SparseLatticeFunction, p: float) -> float:
    """(sum |f|^p)^(1/p); max |f| for p = inf."""
    _check_p(p)
    if f.is_zero():
        return 0.0
    mags = np.abs(f.values_array())
    if p == math.inf:
        return float(mags.max())
    return float(np.sum(mags ** p) ** (1.0 / p))


def edges_touching(points: Iterable[Point], dim: int) -> List[Tuple[Point, int]]:
    """
    Unordered lattice edges with at least one endpoint in points.

    Each edge is returned once as (lower endpoint, axis).
    """
    seen: Set[Tuple[Point, int]] = set()
    for x in points:
        for j in range(dim):
            for lower in (x, shift(x, j, -1)):
                seen.add((lower, j))
    return sorted(seen)


def edge_differences(f: SparseLatticeFunction) -> np.ndarray:
    """|f(x) - f(y)| over every edge touching the support."""
    diffs = [
        abs(f.get(lower) - f.get(shift(lower, j, 1)))
        for lower, j in edges_touching(f.support(), f.dim)
    ]
    return np.array(diffs, dtype=float)


def grad_energy(f: SparseLatticeFunction, p: float = 2.0) -> float:
    """sum over unordered edges of |f(x) - f(y)|^p."""
    _check_p(p)
    if p == math.inf:
        raise domain_error("grad_energy needs finite p; use grad_lp_norm for p = inf")
    diffs = edge_differences(f)
    if diffs.size == 0:
        return 0.0
    return float(np.sum(diffs ** p))


def grad_lp_norm(f: SparseLatticeFunction, p: float) -> float:
    """||grad f||_p with each unordered edge counted once."""
    _check_p(p)
    diffs = edge_differences(f)
    if diffs.size == 0:
        return 0.0
    if p == math.inf:
        return float(diffs.max())
    return float(np.sum(diffs ** p) ** (1.0 / p))


# -------------------------
# DIFFERENCE OPERATORS
# -------------------------

def backward_difference(f: SparseLatticeFunction, axis: int) -> SparseLatticeFunction:
    """D_j u(n) = u(n) - u(n - e_j)."""
    if not 0 <= axis < f.dim:
        raise domain_error(f"axis {axis} out of range for dim {f.dim}")
    out: Dict[Point, Scalar] = {}
    for x, v in f.items():
        out[x] = out.get(x, 0.0) + v
        y = shift(x, axis, 1)
        out[y] = out.get(y, 0.0) - v
    return SparseLatticeFunction(f.dim, out)


def laplacian(f: SparseLatticeFunction) -> SparseLatticeFunction:
    """Delta u(n) = sum_j 2u(n) - u(n - e_j) - u(n + e_j)."""
    out: Dict[Point, Scalar] = {}
    for x, v in f.items():
        out[x] = out.get(x, 0.0) + 2 * f.dim * v
        for y in neighbors(x):
            out[y] = out.get(y, 0.0) - v
    return SparseLatticeFunction(f.dim, out)


def laplacian_power(f: SparseLatticeFunction, m: int) -> SparseLatticeFunction:
    if m < 0:
        raise domain_error("order must be >= 0", m=m)
    for _ in range(m):
        f = laplacian(f)
    return f


def difference_ops(
    f: SparseLatticeFunction,
    kind: str,
    order: int = 1,
    axis: Optional[int] = None,
) -> Union[SparseLatticeFunction, List[SparseLatticeFunction]]:
    """
    Apply a difference operator `order` times.

    kind:
        "D_j"   - backward difference along `axis`
        "D"     - the vector (D_1^m f, ..., D_d^m f)
        "Delta" - the discrete Laplacian
    """
    if order < 1:
        raise domain_error("order must be >= 1", order=order)
    if kind == "D_j":
        if axis is None:
            raise domain_error("D_j needs an axis")
        for _ in range(order):
            f = backward_difference(f, axis)
        return f
    if kind == "D":
        return [difference_ops(f, "D_j", order, j) for j in range(f.dim)]  # type: ignore[misc]
    if kind in ("Delta", "Δ"):
        return laplacian_power(f, order)
    raise domain_error(f"Unknown difference operator: {kind}. Available: ['D_j', 'D', 'Delta']")


def sq_mass(f: SparseLatticeFunction) -> float:
    """sum |f|^2."""
    if f.is_zero():
        return 0.0
    return float(np.sum(np.abs(f.values_array()) ** 2))


def gradient_sq_mass(f: SparseLatticeFunction) -> float:
    """sum_n sum_j |D_j f(n)|^2, equal to grad_energy(f, 2)."""
    return sum(sq_mass(backward_difference(f, j)) for j in range(f.dim))


# -------------------------
# BOUNDARIES
# -------------------------

def vertex_boundary(points: Iterable[Iterable[int]], dim: Optional[int] = None) -> FrozenSet[Point]:
    """Vertices outside X adjacent to some vertex of X."""
    xs = {as_point(p) for p in points}
    if dim is not None:
        for x in xs:
            if len(x) != dim:
                raise domain_error(f"point {x} does not have dimension {dim}")
    out: Set[Point] = set()
    for x in xs:
        for y in neighbors(x):
            if y not in xs:
                out.add(y)
    return frozenset(out)


def edge_boundary(points: Iterable[Iterable[int]]) -> FrozenSet[Edge]:
    """Edges with exactly one endpoint in X, stored as (inside, outside)."""
    xs = {as_point(p) for p in points}
    out: Set[Edge] = set()
    for x in xs:
        for y in neighbors(x):
            if y not in xs:
                out.add((x, y))
    return frozenset(out)


# -------------------------
# COAREA
# -------------------------

@dataclass
class CoareaLevel:
    """Contribution of one level interval [t, t_next)."""
    t: float
    t_next: float
    boundary_edges: int
    plain: float
    modified: float


@dataclass
class CoareaReport:
    """Plain and modified coarea integrals next to the direct edge sum."""
    p: float
    plain: float
    modified: float
    direct: float
    levels: List[CoareaLevel] = field(default_factory=list)

    @property
    def value(self) -> float:
        return self.plain

    def consistent(self, rtol: float = 1e-12) -> bool:
        scale = max(1.0, abs(self.direct))
        return (
            abs(self.plain - self.direct) <= rtol * scale
            and abs(self.modified - self.direct) <= rtol * scale
        )


def coarea_decompose(f: SparseLatticeFunction, p: float) -> CoareaReport:
    """
    Decompose sum |f(x)-f(y)|^p over the superlevel sets {f > t}.

    plain:    integral of sum_{boundary edges} |f(x)-f(y)|^(p-1) dt
    modified: p * integral of sum_{boundary edges} (t - f(outside))^(p-1) dt,
              integrated in closed form on each level interval.
    """
    if p == math.inf:
        raise domain_error("coarea decomposition is not defined for p = inf")
    _check_p(p)
    for x, v in f.items():
        if isinstance(v, complex) and v.imag != 0:
            raise domain_error("coarea needs a real function", point=list(x))
        if v.real < 0:
            raise domain_error("coarea needs f >= 0", point=list(x), value=float(v.real))

    edges = edges_touching(f.support(), f.dim)
    if not edges:
        return CoareaReport(p=p, plain=0.0, modified=0.0, direct=0.0)

    a = np.array([float(np.real(f.get(lo))) for lo, _ in edges])
    b = np.array([float(np.real(f.get(shift(lo, j, 1)))) for lo, j in edges])
    hi = np.maximum(a, b)
    low = np.minimum(a, b)
    gap = hi - low

    direct = float(np.sum(gap ** p))
    levels_t = sorted({0.0} | {float(np.real(v)) for _, v in f.items()})

    plain_total = 0.0
    modified_total = 0.0
    levels: List[CoareaLevel] = []
    for t, t_next in zip(levels_t[:-1], levels_t[1:]):
        mask = (low <= t) & (hi > t)
        width = t_next - t
        plain = float(width * np.sum(gap[mask] ** (p - 1)))
        modified = float(np.sum((t_next - low[mask]) ** p - (t - low[mask]) ** p))
        plain_total += plain
        modified_total += modified
        levels.append(CoareaLevel(t, t_next, int(mask.sum()), plain, modified))

    return CoareaReport(
        p=p,
        plain=plain_total,
        modified=modified_total,
        direct=direct,
        levels=levels,
    )


def require_zero_at_origin(f: SparseLatticeFunction) -> None:
    origin = (0,) * f.dim
    if f.get(origin) != 0:
        raise precondition_error("u(0) must vanish", value=str(f.get(origin)))

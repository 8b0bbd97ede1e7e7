"""
Labellings package for latticeineq.

A labelling enumerates the vertices of Z^d as v_1, v_2, ...; the decreasing
rearrangement along it puts the k-th largest value of |f| on v_k.
"""
from __future__ import annotations

from .base import Enumeration, l1_ball_size
from .l1 import L1Enumeration, l1_sphere
from .spiral import SpiralEnumeration
from .wang_wang import WangWangEnumeration

__all__ = [
    "Enumeration",
    "L1Enumeration",
    "SpiralEnumeration",
    "WangWangEnumeration",
    "get_labelling",
    "l1_ball_size",
    "l1_sphere",
]

LABELLINGS = {
    "spiral": SpiralEnumeration,
    "wang_wang": WangWangEnumeration,
    "l1": L1Enumeration,
}


def get_labelling(name: str, **kwargs) -> Enumeration:
    """
    Factory function to get a labelling by name.

    Args:
        name: "spiral", "wang_wang" or "l1"
        **kwargs: Labelling-specific arguments (dim)

    Returns:
        Fresh enumeration instance

    Raises:
        ValueError: If name is unknown
    """
    if name not in LABELLINGS:
        raise ValueError(f"Unknown labelling: {name}. Available: {list(LABELLINGS.keys())}")
    return LABELLINGS[name](**kwargs)

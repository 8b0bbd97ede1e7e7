"""
Result types shared by all checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .config import INEQUALITY_SLACK


@dataclass
class QuotientReport:
    """
    Both sides of an inequality LHS >= constant * RHS-sum.

    ratio is LHS / RHS-sum (inf when the RHS-sum vanishes).
    """
    name: str
    lhs: float
    rhs_sum: float
    ratio: float
    constant: float
    holds: bool
    notes: List[str] = field(default_factory=list)

    @classmethod
    def build(
        cls,
        name: str,
        lhs: float,
        rhs_sum: float,
        constant: float,
        slack: float = INEQUALITY_SLACK,
        notes: Optional[List[str]] = None,
    ) -> "QuotientReport":
        lhs = float(lhs)
        rhs_sum = float(rhs_sum)
        constant = float(constant)
        ratio = lhs / rhs_sum if rhs_sum > 0 else math.inf
        bound = constant * rhs_sum
        holds = lhs >= bound - slack * max(1.0, abs(bound))
        return cls(name, lhs, rhs_sum, ratio, constant, holds, list(notes or []))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs_sum": self.rhs_sum,
            "ratio": self.ratio,
            "constant": self.constant,
            "holds": self.holds,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QuotientReport":
        return cls(
            name=str(data["name"]),
            lhs=float(data["lhs"]),
            rhs_sum=float(data["rhs_sum"]),
            ratio=float(data["ratio"]),
            constant=float(data["constant"]),
            holds=bool(data["holds"]),
            notes=list(data.get("notes", [])),
        )


@dataclass
class CheckResult:
    """Outcome of one named check inside a CLI suite."""
    check_id: str
    description: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    witness: Any = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "check_id": self.check_id,
            "description": self.description,
            "passed": self.passed,
            "details": self.details,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

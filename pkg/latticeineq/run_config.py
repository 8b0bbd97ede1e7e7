"""
Run configuration model and validation.

A run is one CLI command with its parameters. Values come from an optional
JSON file and from flags; flags win. Unknown keys are rejected.
"""
from __future__ import annotations

import json
import math
import re
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .config import DEFAULT_SEED

COMMANDS = (
    "hardy1d",
    "hardy-fourier",
    "hardy-nd",
    "torus",
    "antisym",
    "rearrange-axis",
    "rearrange-fourier",
    "rearrange-lattice",
    "identity",
    "search",
    "tables",
)

Command = Literal[
    "hardy1d",
    "hardy-fourier",
    "hardy-nd",
    "torus",
    "antisym",
    "rearrange-axis",
    "rearrange-fourier",
    "rearrange-lattice",
    "identity",
    "search",
    "tables",
]

TABLE_CONSTANTS = ("H", "HR", "R", "C", "C_tilde")
TableConstant = Literal["H", "HR", "R", "C", "C_tilde"]

_BUDGET = re.compile(r"^(\d+)(s?)$")


class RunConfig(BaseModel):
    """Parameters of one verification run."""
    model_config = ConfigDict(extra="forbid")

    command: Command
    seed: int = Field(default=DEFAULT_SEED, ge=0, le=2 ** 32 - 1, description="RNG seed")
    grid: int = Field(default=1024, ge=16, le=2 ** 16, description="Samples per axis for Fourier grids")
    pvalues: List[float] = Field(
        default_factory=lambda: [1.0, 1.5, 2.0, 3.0, math.inf],
        description="Exponents p for gradient norms",
    )
    dmax: int = Field(default=16, ge=2, le=512, description="Largest dimension in sweeps")
    kmax: int = Field(default=16, ge=1, le=64, description="Largest order in identity and chain checks")
    budget: str = Field(default="2000", description="Search budget: evaluations (e.g. 2000) or seconds (e.g. 30s)")
    format: Literal["json", "csv"] = "json"
    out: Optional[str] = Field(default=None, description="Report path; stdout when missing")
    labelling: Literal["spiral", "wang_wang", "l1"] = "spiral"
    p: float = Field(default=2.0, description="Exponent for the search")
    constants: List[TableConstant] = Field(default_factory=lambda: list(TABLE_CONSTANTS))
    trials: int = Field(default=50, ge=1, le=100_000, description="Random functions per randomized check")
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"

    @field_validator("pvalues")
    @classmethod
    def pvalues_admissible(cls, v: List[float]) -> List[float]:
        if not v:
            raise ValueError("at least one p is required")
        for p in v:
            if not (p == math.inf or p >= 1):
                raise ValueError(f"p must be >= 1 or inf, got {p}")
        return v

    @field_validator("p")
    @classmethod
    def p_admissible(cls, v: float) -> float:
        if not (v == math.inf or v >= 1):
            raise ValueError(f"p must be >= 1 or inf, got {v}")
        return v

    @field_validator("budget")
    @classmethod
    def budget_format(cls, v: str) -> str:
        match = _BUDGET.match(v.strip())
        if not match or int(match.group(1)) < 1:
            raise ValueError("budget must be a positive integer, optionally followed by 's'")
        return v.strip()

    def budget_limits(self) -> Tuple[int, Optional[float]]:
        """(evaluations, seconds); a seconds budget leaves the evaluation count open."""
        match = _BUDGET.match(self.budget)
        value = int(match.group(1))
        if match.group(2):
            return 10 ** 9, float(value)
        return value, None

    def to_dict(self) -> Dict[str, Any]:
        data = self.model_dump()
        data["pvalues"] = [str(p) if p == math.inf else p for p in self.pvalues]
        data["p"] = str(self.p) if self.p == math.inf else self.p
        return data


def validate_run_config(data: Dict[str, Any]) -> Tuple[bool, Optional[RunConfig], List[str]]:
    """
    Validate raw run parameters.

    Returns:
        (success, model, errors) with errors formatted "field_path: message"
    """
    try:
        return (True, RunConfig(**data), [])
    except ValidationError as e:
        errors = []
        for err in e.errors():
            field_path = ".".join(str(x) for x in err["loc"])
            errors.append(f"{field_path}: {err['msg']}")
        return (False, None, errors)


def load_run_config(path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """
    Merge a JSON config file with flag overrides and validate.

    Raises:
        ValueError: on unreadable files, bad JSON or invalid parameters
    """
    data: Dict[str, Any] = {}
    if path:
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except FileNotFoundError:
            raise ValueError(f"config file not found: {path}")
        except json.JSONDecodeError as e:
            raise ValueError(f"invalid JSON in {path}: {e.msg} (line {e.lineno}, column {e.colno})")
        if not isinstance(data, dict):
            raise ValueError(f"config file {path} must hold a JSON object")
    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value

    success, model, errors = validate_run_config(data)
    if not success or model is None:
        raise ValueError("invalid run configuration:\n" + "\n".join(f"  - {e}" for e in errors))
    return model

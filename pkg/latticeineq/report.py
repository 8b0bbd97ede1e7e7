"""
Deterministic report serialization.

Floats are written as FLOAT_FORMAT strings, exact rationals as "p/q", so the
same results always produce the same bytes.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
import re
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .config import FLOAT_FORMAT
from .run_config import RunConfig
from .utils import atomic_write_bytes

FORMATS = ("json", "csv")

_FLOAT_TEXT = re.compile(r"^-?\d\.\d+e[+-]\d+$")
_SPECIAL = {"inf": math.inf, "-inf": -math.inf, "nan": math.nan}


def format_float(value: float) -> str:
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return FLOAT_FORMAT % value


def normalize(value: Any) -> Any:
    """JSON-ready copy with floats and rationals rendered as strings."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, complex):
        return [format_float(value.real), format_float(value.imag)]
    if isinstance(value, str) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [normalize(v) for v in value]
    if hasattr(value, "to_dict"):
        return normalize(value.to_dict())
    if dataclasses.is_dataclass(value):
        return normalize(dataclasses.asdict(value))
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _flatten(row: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            out[name] = json.dumps(value, sort_keys=True, ensure_ascii=False)
        else:
            out[name] = value
    return out


def emit_report(results: Sequence[Any], config: Optional[RunConfig] = None, fmt: str = "json") -> bytes:
    """
    Serialize results.

    JSON without a config is a bare array; with a config it is an object
    holding the config, the seed and the results. CSV has one row per result,
    nested fields flattened to dotted columns, and command/seed columns when a
    config is given. Rows that all carry a "table" key are written as one
    block per table, blocks separated by a blank line, each with its own
    header in the rows' key order.
    """
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format: {fmt}. Available: {list(FORMATS)}")
    rows = [normalize(r) for r in results]

    if fmt == "json":
        doc: Any = rows
        if config is not None:
            doc = {"config": normalize(config.to_dict()), "seed": config.seed, "results": rows}
        return (json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n").encode("utf-8")

    flat = [_flatten(r) if isinstance(r, dict) else {"value": r} for r in rows]
    if config is not None:
        for r in flat:
            r["command"] = config.command
            r["seed"] = config.seed
    buf = io.StringIO()
    if flat and all("table" in r for r in flat):
        blocks: Dict[str, List[Dict[str, Any]]] = {}
        for r in flat:
            blocks.setdefault(str(r.pop("table")), []).append(r)
        for n, block in enumerate(blocks.values()):
            if n:
                buf.write("\n")
            _write_csv(buf, list(block[0]), block)
    else:
        _write_csv(buf, sorted({key for r in flat for key in r}), flat)
    return buf.getvalue().encode("utf-8")


def _write_csv(buf: io.StringIO, header: List[str], rows: List[Dict[str, Any]]) -> None:
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(r)


def decode(value: Any) -> Any:
    """Inverse of normalize for floats; rationals stay strings."""
    if isinstance(value, str):
        if value in _SPECIAL:
            return _SPECIAL[value]
        if _FLOAT_TEXT.match(value):
            return float(value)
        return value
    if isinstance(value, list):
        return [decode(v) for v in value]
    if isinstance(value, dict):
        return {k: decode(v) for k, v in value.items()}
    return value


def parse_report(data: bytes) -> Any:
    """Read back a JSON report."""
    return decode(json.loads(data.decode("utf-8")))


def write_report(data: bytes, path: Optional[str] = None) -> None:
    """Atomic write to path, or stdout when path is None."""
    if path:
        atomic_write_bytes(path, data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()

"""
Domain exception and error logging.

Every precondition failure raised by the library is an InequalityError with one of
the error types below, so the CLI can map it to a usage error (exit 2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .config import ERROR_LOG
from .utils import append_jsonl, utc_timestamp

DOMAIN = "domain"
PRECONDITION = "precondition"
BUDGET = "budget"
CONFIG = "config"


@dataclass
class InequalityError(Exception):
    """
    Raised when an operation is called outside its admissible range.

    Usage:
        try:
            weight_w(params, 0)
        except InequalityError as e:
            print(f"{e.error_type}: {e.message}")
    """
    error_type: str
    message: str
    context: Dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        return f"{self.error_type}: {self.message}"


def domain_error(message: str, **context: Any) -> InequalityError:
    return InequalityError(DOMAIN, message, dict(context))


def precondition_error(message: str, **context: Any) -> InequalityError:
    return InequalityError(PRECONDITION, message, dict(context))


def log_error(
    error_type: str,
    message: str,
    extra: Optional[Dict[str, Any]] = None,
    path: str = ERROR_LOG,
) -> None:
    """Append an error record to the error log. Never raises."""
    entry: Dict[str, Any] = {
        "ts": utc_timestamp(),
        "error_type": error_type,
        "message": message,
    }
    if extra:
        entry["extra"] = extra
    try:
        append_jsonl(path, entry)
    except Exception:
        pass

"""
Helpers: JSONL logging, atomic writes, timestamps.
"""
from __future__ import annotations

import json
import os
from datetime import datetime, timezone
from typing import Any, Dict


def utc_timestamp() -> str:
    """Current UTC time as ISO string."""
    return datetime.now(timezone.utc).isoformat()


def ensure_dirs(log_dir: str) -> None:
    """Create the log directory if it is missing."""
    os.makedirs(log_dir, exist_ok=True)


def append_jsonl(path: str, obj: Dict[str, Any]) -> None:
    """Append one JSON line to a file."""
    parent = os.path.dirname(path)
    if parent:
        ensure_dirs(parent)
    with open(path, "a", encoding="utf-8") as f:
        f.write(json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n")


def atomic_write_bytes(path: str, data: bytes) -> None:
    """
    Write bytes to a file atomically.

    Writes a sibling temp file, fsyncs it and renames it over the target.
    On failure the temp file is removed and the old content stays intact.
    """
    parent = os.path.dirname(path)
    if parent:
        ensure_dirs(parent)
    temp_file = path + ".tmp"

    try:
        with open(temp_file, "wb") as f:
            f.write(data)
            f.flush()
            os.fsync(f.fileno())
        os.replace(temp_file, path)
    except Exception:
        try:
            if os.path.exists(temp_file):
                os.remove(temp_file)
        except Exception:
            pass
        raise

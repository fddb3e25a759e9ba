"""Content-addressed cache for computed reports.

A cache entry is one JSON file named by the SHA-256 of the operation name,
the canonicalized request payload, and the package version.  Entries hold
only deterministic report content, so a hit byte-for-byte reproduces what a
fresh computation would serialize.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Optional


def cache_key(operation: str, payload: dict, version: str) -> str:
    canon = json.dumps(
        {"operation": operation, "payload": payload, "version": version},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canon.encode()).hexdigest()


def cache_get(directory: str | Path, key: str) -> Optional[str]:
    path = Path(directory) / f"{key}.json"
    if path.is_file():
        return path.read_text()
    return None


def cache_put(directory: str | Path, key: str, text: str) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / f"{key}.json").write_text(text)

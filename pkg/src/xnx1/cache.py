"""Versioned single-file cache for expensive lookup tables.

The cache is a JSON document carrying a format version and a content key
(checksum of the inputs it was derived from).  Any mismatch or parse error
is treated as a miss so callers silently rebuild; a cache can never poison a
run with stale data.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

CACHE_VERSION = 1


def content_key(*parts) -> str:
    h = hashlib.sha256()
    for part in parts:
        h.update(repr(part).encode())
        h.update(b"\x00")
    return h.hexdigest()


def store(path: Path, key: str, payload: dict) -> None:
    doc = {"version": CACHE_VERSION, "key": key, "payload": payload}
    Path(path).write_text(json.dumps(doc))


def load(path: Path, key: str) -> dict | None:
    """Payload stored under the same version and key, else None."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(doc, dict):
        return None
    if doc.get("version") != CACHE_VERSION or doc.get("key") != key:
        return None
    payload = doc.get("payload")
    return payload if isinstance(payload, dict) else None

"""Content-addressed response cache.

Every response is stored under the SHA-256 hex digest of the canonical
request encoding (JSON with sorted keys and tight separators), sharded by
the first two hex characters:

    cache_root/
      3f/
        3fa4...e1.json

Writes go through a temp file plus atomic rename, so concurrent readers
never observe a partial entry and two writers racing on one key settle on
identical content (the key is derived from the payload).
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path


def canonical_request(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False,
                      separators=(",", ":"))


def request_key(payload: dict) -> str:
    """256-bit content address for one request payload."""
    return hashlib.sha256(
        canonical_request(payload).encode("utf-8")
    ).hexdigest()


class ResponseCache:
    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str) -> dict | None:
        path = self._path(key)
        try:
            with open(path, encoding="utf-8") as fh:
                value = json.load(fh)
        except FileNotFoundError:
            self.misses += 1
            return None
        self.hits += 1
        return value

    def put(self, key: str, value: dict) -> None:
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(value, fh, sort_keys=True, ensure_ascii=False)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise

    def stats(self) -> dict:
        return {"hits": self.hits, "misses": self.misses}


__all__ = ["ResponseCache", "canonical_request", "request_key"]

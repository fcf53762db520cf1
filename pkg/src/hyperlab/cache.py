"""Content-addressed on-disk cache for task reports."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

log = logging.getLogger(__name__)


def cache_dir() -> Path:
    env = os.environ.get("HYPERLAB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hyperlab"


def cache_key(task: dict, version: str) -> str:
    blob = json.dumps({"task": task, "version": version}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ReportCache:
    def __init__(self, root: Path | None = None) -> None:
        self.root = root if root is not None else cache_dir()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str) -> dict | None:
        path = self._path(key)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError:
            return None
        try:
            entry = json.loads(text)
            if entry.get("key") != key or not isinstance(entry.get("report"), dict):
                raise ValueError("malformed entry")
        except ValueError:
            log.warning("discarding corrupt cache entry %s", path)
            return None
        return entry["report"]

    def put(self, key: str, report: dict) -> bool:
        """Store atomically (temp file + rename); warn and carry on if impossible."""
        path = self._path(key)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump({"key": key, "report": report}, fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError as exc:
            log.warning("cache not writable (%s); continuing without it", exc)
            return False
        return True

"""Persistent JSON cache for expensive results.

One file per key under a two-level hashed directory; entries record the
tool version and are ignored (and recomputed) on mismatch or corruption.
Writers use atomic replace, and since every cached computation is
deterministic, last-write-wins is safe for concurrent writers.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time

TOOL_VERSION = "0.1.0"
DEFAULT_DIR = os.path.join(os.path.expanduser("~"), ".hiveforge")


class Cache:
    def __init__(self, directory: str = DEFAULT_DIR, enabled: bool = True):
        self.directory = directory
        self.enabled = enabled

    def _path(self, key: str) -> str:
        digest = hashlib.sha256(key.encode()).hexdigest()
        return os.path.join(self.directory, digest[:2], digest[2:4], digest + ".json")

    def get(self, key: str):
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            with open(path, encoding="utf-8") as fh:
                entry = json.load(fh)
        except FileNotFoundError:
            return None
        except (json.JSONDecodeError, OSError):
            import sys

            print(f"warning: ignoring corrupt cache entry {path}", file=sys.stderr)
            return None
        if entry.get("tool_version") != TOOL_VERSION or entry.get("key") != key:
            return None
        return entry.get("payload")

    def put(self, key: str, payload) -> None:
        if not self.enabled:
            return
        path = self._path(key)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        entry = {
            "key": key,
            "payload": payload,
            "tool_version": TOOL_VERSION,
            "created_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def stats(self) -> dict:
        entries = 0
        size = 0
        for root, _dirs, files in os.walk(self.directory):
            for f in files:
                if f.endswith(".json"):
                    entries += 1
                    size += os.path.getsize(os.path.join(root, f))
        return {"entries": entries, "bytes": size, "directory": self.directory}

    def gc(self) -> dict:
        """Drop corrupt and version-mismatched entries."""
        removed = 0
        for root, _dirs, files in os.walk(self.directory):
            for f in files:
                if not f.endswith(".json"):
                    continue
                path = os.path.join(root, f)
                try:
                    with open(path, encoding="utf-8") as fh:
                        entry = json.load(fh)
                    keep = entry.get("tool_version") == TOOL_VERSION
                except (json.JSONDecodeError, OSError):
                    keep = False
                if not keep:
                    os.unlink(path)
                    removed += 1
        return {"removed": removed}

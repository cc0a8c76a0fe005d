"""On-disk result cache with checksummed, atomically written entries."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

__all__ = ["CacheEntry", "ResultCache", "checksum"]

log = logging.getLogger(__name__)


def checksum(payload: str) -> str:
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    key: str
    payload: str
    checksum: str

    @classmethod
    def make(cls, key: str, payload: str) -> "CacheEntry":
        return cls(key, payload, checksum(payload))

    def is_valid(self) -> bool:
        return checksum(self.payload) == self.checksum

    def dumps(self) -> str:
        return json.dumps(
            {"key": self.key, "payload": self.payload, "checksum": self.checksum},
            sort_keys=True,
        )


class ResultCache:
    """Directory of JSON cache files, one per key.

    With ``directory=None`` every call is a no-op.  Read and write failures
    never propagate; they are logged and treated as a miss.
    """

    def __init__(self, directory: str | os.PathLike | None):
        self.directory = Path(directory) if directory is not None else None

    def _path(self, key: str) -> Path:
        return self.directory / (hashlib.sha256(key.encode("utf-8")).hexdigest()[:32] + ".json")

    def get(self, key: str) -> str | None:
        if self.directory is None:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
            entry = CacheEntry(raw["key"], raw["payload"], raw["checksum"])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None
        if entry.key != key:
            return None
        if not entry.is_valid():
            log.warning("ignoring cache entry %s: checksum mismatch", path)
            return None
        return entry.payload

    def put(self, key: str, payload: str) -> None:
        if self.directory is None:
            return
        entry = CacheEntry.make(key, payload)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    fh.write(entry.dumps())
                os.replace(tmp, self._path(key))
            except BaseException:
                os.unlink(tmp)
                raise
        except OSError as exc:
            log.warning("could not write cache entry for %r: %s", key, exc)

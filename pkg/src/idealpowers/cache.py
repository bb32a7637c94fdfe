"""Content-addressed result cache for expensive computations.

Keys hash the canonical ideal form, the operation name, its parameters and
the engine version, so an algorithm change invalidates everything it could
affect.  Writes are atomic (temp file + rename), entries carry a checksum,
and corrupted entries are discarded and recomputed with a warning.  A
random fraction of hits is spot-audited against recomputation each run.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
import time
import warnings
from pathlib import Path
from typing import Callable

from .errors import CacheAuditError


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class ResultCache:
    def __init__(
        self,
        root: str | os.PathLike,
        engine_version: str,
        *,
        audit_rate: float = 0.05,
        rng: random.Random | None = None,
    ):
        self.root = Path(root)
        self.engine_version = engine_version
        self.audit_rate = audit_rate
        self.rng = rng or random.Random()
        self.root.mkdir(parents=True, exist_ok=True)

    def key(self, *, ideal: str, operation: str, parameters: dict) -> str:
        blob = _canonical_json(
            {
                "ideal": ideal,
                "operation": operation,
                "parameters": parameters,
                "engine_version": self.engine_version,
            }
        )
        return hashlib.sha256(blob.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str):
        """Stored payload for the key, or None on miss or corruption."""
        path = self._path(key)
        try:
            raw = path.read_text()
        except OSError:
            return None
        try:
            entry = json.loads(raw)
            payload_text = entry["payload"]
            checksum = entry["checksum"]
        except (json.JSONDecodeError, KeyError, TypeError):
            warnings.warn(f"discarding unreadable cache entry {path.name}")
            self._discard(path)
            return None
        if hashlib.sha256(payload_text.encode()).hexdigest() != checksum:
            warnings.warn(f"discarding corrupted cache entry {path.name}")
            self._discard(path)
            return None
        return json.loads(payload_text)

    def put(self, key: str, payload) -> None:
        payload_text = _canonical_json(payload)
        entry = {
            "key": key,
            "engine_version": self.engine_version,
            "payload": payload_text,
            "checksum": hashlib.sha256(payload_text.encode()).hexdigest(),
            "created_at": time.time(),
        }
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(json.dumps(entry, sort_keys=True))
            os.replace(tmp, path)  # concurrent readers see old or new, never torn
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def get_or_compute(self, *, ideal: str, operation: str, parameters: dict, compute: Callable[[], object]):
        key = self.key(ideal=ideal, operation=operation, parameters=parameters)
        hit = self.get(key)
        if hit is not None:
            if self.rng.random() < self.audit_rate:
                fresh = json.loads(_canonical_json(compute()))
                if fresh != hit:
                    raise CacheAuditError(
                        f"cache audit mismatch for {operation} on {ideal}"
                    )
            return hit
        value = compute()
        self.put(key, value)
        # Normalize through JSON so hits and misses return identical shapes.
        return json.loads(_canonical_json(value))

    def _discard(self, path: Path) -> None:
        try:
            path.unlink()
        except OSError:
            pass

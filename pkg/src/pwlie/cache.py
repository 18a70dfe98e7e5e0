"""On-disk cache of permutation weight sets, one JSON file per source weight."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .pweights import PermutationWeightSet
from .weights import AffineDominant

log = logging.getLogger(__name__)

ENV_VAR = "PWLIE_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "pwlie"


class PWeightCache:
    """Single-writer JSON store keyed by (rank, labels).

    A file holds the largest horizon computed so far; shorter requests are
    served by restriction.  Unreadable or inconsistent files are ignored (and
    later overwritten), never trusted.  I/O failures on write are collected
    in :attr:`errors` instead of being raised.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.errors: list[str] = []

    def path_for(self, source: AffineDominant) -> Path:
        labels = "-".join(str(a) for a in source.labels)
        return self.directory / f"A{source.rank}_{labels}.json"

    def load(self, source: AffineDominant, K: int) -> PermutationWeightSet | None:
        path = self.path_for(source)
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache file %s: %s", path, exc)
            return None
        try:
            stored = PermutationWeightSet.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("ignoring corrupted cache file %s: %s", path, exc)
            return None
        if stored.source != source:
            log.warning("cache file %s belongs to %s", path, stored.source)
            return None
        if stored.horizon < K:
            return None
        return stored

    def store(self, pws: PermutationWeightSet) -> bool:
        path = self.path_for(pws.source)
        existing = self.load(pws.source, pws.horizon + 1)
        if existing is not None:
            return True
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(pws.to_json(), fh, indent=1)
                os.replace(tmp, path)
            except BaseException:
                try:
                    os.unlink(tmp)
                except OSError:
                    pass
                raise
        except OSError as exc:
            msg = f"cannot write cache file {path}: {exc}"
            log.warning(msg)
            self.errors.append(msg)
            return False
        return True

"""On-disk cache of Hilbert functions, enabled by ``NICHOLS_FORGE_CACHE``.

Entries are JSON files named by the sha256 of the inputs (relations, degree
bound, alphabet size, format version), so any change of input misses.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Iterable, Optional

from .ncalg import HilbertFunction, NCPoly, complete, hilbert
from .scalars import scalar_to_str

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
ENV_VAR = "NICHOLS_FORGE_CACHE"


def cache_dir() -> Optional[Path]:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def input_key(generators: Iterable[NCPoly], D: int, nletters: int) -> str:
    gens = sorted(sorted((list(w), scalar_to_str(c)) for w, c in g.terms.items()) for g in generators)
    blob = json.dumps({"format": FORMAT_VERSION, "D": D, "nletters": nletters, "generators": gens},
                      sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def load(key: str, directory: Path | None = None) -> Optional[HilbertFunction]:
    directory = directory or cache_dir()
    if directory is None:
        return None
    path = directory / f"{key}.json"
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("format") != FORMAT_VERSION or data.get("key") != key:
        return None
    return HilbertFunction(tuple(data["dims"]))


def store(key: str, h: HilbertFunction, extra: dict | None = None, directory: Path | None = None) -> None:
    directory = directory or cache_dir()
    if directory is None:
        return
    directory.mkdir(parents=True, exist_ok=True)
    data = {"format": FORMAT_VERSION, "key": key, "dims": list(h.dims), **(extra or {})}
    tmp = directory / f"{key}.json.tmp"
    tmp.write_text(json.dumps(data))
    tmp.replace(directory / f"{key}.json")


def cached_hilbert(generators, D: int, nletters: int, threads: int = 1):
    """``(HilbertFunction, basis size or None, hit)``; computes on a miss."""
    gens = list(generators)
    key = input_key(gens, D, nletters)
    hit = load(key)
    if hit is not None:
        log.info("cache hit %s", key[:12])
        return hit, None, True
    gb = complete(gens, D, nletters, threads)
    h = hilbert(gb)
    store(key, h, {"basis_size": len(gb)})
    return h, len(gb), False

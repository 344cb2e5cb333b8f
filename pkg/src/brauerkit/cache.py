"""On-disk cache for subgroup lattices and tables of marks.

One JSON file per group, named by the SHA-256 of the canonical element list.
Files carry a version tag and are ignored when it does not match.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from .burnside_ring import TableOfMarks, table_of_marks
from .perm_core import FiniteGroup, build_lattice

CACHE_VERSION = 1
ENV_VAR = "BRAUERKIT_CACHE"

log = logging.getLogger(__name__)


def content_key(G: FiniteGroup) -> str:
    payload = json.dumps([G.degree, [list(e) for e in G.elements]], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def default_cache_dir() -> Path | None:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


class LatticeCache:
    def __init__(self, directory: str | os.PathLike) -> None:
        self.directory = Path(directory)

    def path(self, G: FiniteGroup) -> Path:
        return self.directory / f"{content_key(G)}.json"

    def load(self, G: FiniteGroup) -> bool:
        """Install a cached lattice and table of marks on ``G``; False on a miss."""
        path = self.path(G)
        if not path.exists():
            return False
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as e:
            log.warning("unreadable cache file %s: %s", path, e)
            return False
        if data.get("version") != CACHE_VERSION:
            return False
        lat = build_lattice(G, [[tuple(k) for k in keys] for keys in data["classes"]])
        G._cache["lattice"] = lat
        G._cache["tom"] = TableOfMarks(G, tuple(tuple(r) for r in data["marks"]))
        return True

    def store(self, G: FiniteGroup) -> None:
        lat = G.lattice
        data = {
            "version": CACHE_VERSION,
            "order": G.order,
            "classes": [[list(m.members) for m in c.members] for c in lat.classes],
            "marks": table_of_marks(G).tolist(),
        }
        self.directory.mkdir(parents=True, exist_ok=True)
        tmp = self.path(G).with_suffix(".tmp")
        tmp.write_text(json.dumps(data, separators=(",", ":")))
        tmp.replace(self.path(G))

    def attach(self, G: FiniteGroup) -> FiniteGroup:
        if self.path(G).exists() and ("lattice" in G._cache or self.load(G)):
            return G
        self.store(G)
        return G

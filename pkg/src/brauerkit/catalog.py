"""The built-in catalog of test groups (all of order at most 120)."""

from __future__ import annotations

from .groupspec import parse_group_spec
from .perm_core import FiniteGroup

# (label, spec); S_3 x C_2 is omitted because it is D 12
CATALOG: tuple[tuple[str, str], ...] = (
    *((f"C{n}", f"C {n}") for n in range(1, 25)),
    ("C2xC2", "C 2 x C 2"),
    ("C2xC4", "C 2 x C 4"),
    ("C2xC2xC2", "C 2 x C 2 x C 2"),
    ("C3xC3", "C 3 x C 3"),
    *((f"D{m}", f"D {m}") for m in range(6, 17, 2)),
    ("Q8", "Q 8"),
    ("S3", "S 3"),
    ("S4", "S 4"),
    ("S5", "S 5"),
    ("A4", "A 4"),
    ("A5", "A 5"),
    ("S3xC3", "S 3 x C 3"),
    ("A4xC2", "A 4 x C 2"),
    ("C3:C4", "perm 7 : (0 1 2), (1 2)(3 4 5 6)"),
)


def catalog_groups(max_order: int | None = None) -> list[tuple[str, FiniteGroup]]:
    out = []
    for label, spec in CATALOG:
        G = parse_group_spec(spec).build()
        if max_order is None or G.order <= max_order:
            out.append((label, G))
    return out


def lookup(label: str) -> str:
    for name, spec in CATALOG:
        if name == label:
            return spec
    raise KeyError(label)

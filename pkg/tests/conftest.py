from __future__ import annotations

import pytest

from brauerkit.catalog import catalog_groups
from brauerkit.groupspec import parse_group_spec
from brauerkit.perm_core import FiniteGroup, Subgroup

ACCEPTANCE_LINES = pytest.StashKey[list]()


def group(spec: str) -> FiniteGroup:
    return parse_group_spec(spec).build()


def subgroup_of_order(G: FiniteGroup, order: int, normal: bool | None = None) -> Subgroup:
    """Representative of the first class of the given order (optionally normal)."""
    lat = G.lattice
    for i, c in enumerate(lat.classes):
        if c.order == order and (normal is None or lat.normal_flags[i] == normal):
            return c.representative
    raise LookupError(order)


@pytest.fixture(scope="session")
def full_catalog() -> list[tuple[str, FiniteGroup]]:
    return catalog_groups()


@pytest.fixture
def acceptance_log(request) -> list[str]:
    """Lines collected here are printed in the terminal summary."""
    stash = request.config.stash
    if ACCEPTANCE_LINES not in stash:
        stash[ACCEPTANCE_LINES] = []
    return stash[ACCEPTANCE_LINES]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)

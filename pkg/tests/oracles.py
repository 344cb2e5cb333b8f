"""Brute-force reference computations shared by the tests.

These work on raw permutation tuples and explicit coset sets, so they share no
code path with the table-driven library routines they are compared against.
"""

from __future__ import annotations

from brauerkit.burnside_ring import BurnsideElement
from brauerkit.perm_core import FiniteGroup, Subgroup


def compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[i] for i in b)


def left_cosets(G: FiniteGroup, K: Subgroup) -> list[frozenset]:
    ks = [G.elements[k] for k in K.members]
    cosets = {frozenset(compose(g, k) for k in ks) for g in G.elements}
    return sorted(cosets, key=min)


def fixed_cosets(G: FiniteGroup, H: Subgroup, K: Subgroup) -> int:
    """``#{gK : h g K = g K for all h in H}``, enumerated coset by coset."""
    hs = [G.elements[h] for h in H.members]
    count = 0
    for coset in left_cosets(G, K):
        g = next(iter(coset))
        if all(compose(h, g) in coset for h in hs):
            count += 1
    return count


def marks_by_enumeration(G: FiniteGroup) -> list[list[int]]:
    reps = [c.representative for c in G.lattice.classes]
    return [[fixed_cosets(G, H, K) for K in reps] for H in reps]


def orbit_decomposition(G: FiniteGroup, points: list, act) -> BurnsideElement:
    """Decompose the G-set ``points`` under ``act(g_tuple, point)``."""
    lat = G.lattice
    out = [0] * len(lat)
    remaining = set(points)
    while remaining:
        pt = min(remaining, key=repr)
        orbit = {act(g, pt) for g in G.elements}
        remaining -= orbit
        stab = [i for i, g in enumerate(G.elements) if act(g, pt) == pt]
        out[lat.class_of(stab)] += 1
    return BurnsideElement(G, tuple(out))


def coset_set(G: FiniteGroup, K: Subgroup) -> tuple[list, callable]:
    cosets = left_cosets(G, K)

    def act(g, coset):
        return frozenset(compose(g, x) for x in coset)

    return cosets, act


def restrict_by_orbits(G: FiniteGroup, H: Subgroup, K: Subgroup) -> BurnsideElement:
    """``Res_H [G/K]`` as the orbit decomposition of H acting on G/K."""
    Hs = G.subgroup_group(H)
    cosets, act = coset_set(G, K)
    return orbit_decomposition(Hs, cosets, act)


def product_by_orbits(G: FiniteGroup, K1: Subgroup, K2: Subgroup) -> BurnsideElement:
    """``[G/K1] * [G/K2]`` as the orbit decomposition of the product G-set."""
    c1, act = coset_set(G, K1)
    c2, _ = coset_set(G, K2)
    pairs = [(a, b) for a in c1 for b in c2]
    return orbit_decomposition(G, pairs, lambda g, p: (act(g, p[0]), act(g, p[1])))


def restricted_mark_kernel_check(marks: list[list[int]], rows: list[int], v: list[int]) -> bool:
    """Whether ``v`` has zero marks on every listed row."""
    return all(sum(m * x for m, x in zip(marks[i], v)) == 0 for i in rows)

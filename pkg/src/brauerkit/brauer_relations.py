"""Lattices of Brauer relations K_F(G) inside B(G).

A virtual permutation module vanishes over a field of characteristic 0 iff
its marks vanish on all cyclic subgroups (Artin), and over a field of
characteristic p iff they vanish on all p-hypo-elementary subgroups (Conlon).
So K_F(G) is the integer kernel of the table of marks restricted to the
detecting rows.  The class of G itself is always the last coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import group_classes as gc
from .burnside_ring import BurnsideElement, marks_of, table_of_marks
from .exact_linalg import IntMatrix, coordinate_ideal, in_lattice, kernel_basis
from .perm_core import FiniteGroup


def check_characteristic(char: int) -> int:
    char = int(char)
    if char != 0 and not gc.is_prime(char):
        raise ValueError(f"characteristic must be 0 or a prime, got {char}")
    return char


def is_detecting(H: FiniteGroup, char: int) -> bool:
    if char == 0:
        return gc.is_cyclic(H)
    return gc.is_p_hypo_elementary(H, char)


def detecting_classes(G: FiniteGroup, char: int) -> list[int]:
    char = check_characteristic(char)
    cache = G._cache.setdefault("detecting", {})
    if char not in cache:
        lat = G.lattice
        cache[char] = [
            i for i, c in enumerate(lat.classes)
            if is_detecting(G.subgroup_group(c.representative), char)
        ]
    return list(cache[char])


@dataclass(frozen=True, eq=False)
class RelationLattice:
    group: FiniteGroup
    characteristic: int
    detecting: tuple[int, ...]
    basis: IntMatrix
    top_ideal: int

    @property
    def rank(self) -> int:
        return self.basis.nrows

    def elements(self) -> list[BurnsideElement]:
        return [BurnsideElement(self.group, r) for r in self.basis.rows]

    def __contains__(self, x: BurnsideElement) -> bool:
        return x.group is self.group and in_lattice(self.basis, x.coeffs)

    def to_json(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "detecting": list(self.detecting),
            "rank": self.rank,
            "basis": [list(r) for r in self.basis.rows],
            "basis_readable": [str(x) for x in self.elements()],
            "top_ideal": self.top_ideal,
        }


def detection_matrix(G: FiniteGroup, char: int) -> IntMatrix:
    marks = table_of_marks(G).marks
    return IntMatrix(tuple(marks[i] for i in detecting_classes(G, char)), len(marks))


def relation_lattice(G: FiniteGroup, char: int) -> RelationLattice:
    char = check_characteristic(char)
    cache = G._cache.setdefault("relations", {})
    if char not in cache:
        basis = kernel_basis(detection_matrix(G, char))
        cache[char] = RelationLattice(
            G, char, tuple(detecting_classes(G, char)), basis,
            coordinate_ideal(basis, G.lattice.top),
        )
    return cache[char]


def verify_relation(G: FiniteGroup, char: int, v: BurnsideElement) -> bool:
    if v.group is not G:
        raise ValueError("element does not live on G")
    m = marks_of(v)
    return all(m[i] == 0 for i in detecting_classes(G, char))


def top_coefficient_ideal(G: FiniteGroup, char: int) -> int:
    return relation_lattice(G, char).top_ideal


def predicted_top_ideal(G: FiniteGroup, char: int) -> int:
    """0 / q / 1 from the group-class predicates alone."""
    char = check_characteristic(char)
    if char == 0:
        if gc.is_cyclic(G):
            return 0
        qs = [q for q in gc.prime_divisors(G.order) if gc.is_q_quasi_elementary(G, q)]
    else:
        if gc.is_p_hypo_elementary(G, char):
            return 0
        qs = [q for q in gc.prime_divisors(G.order) if gc.is_pq_dress(G, char, q)]
    if len(qs) > 1:
        raise AssertionError(f"group lies in the class for several primes {qs}")
    return qs[0] if qs else 1


@dataclass(frozen=True)
class TrichotomyReport:
    characteristic: int
    predicted: int
    computed: int

    @property
    def agree(self) -> bool:
        return self.predicted == self.computed

    def to_json(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "predicted": self.predicted,
            "computed": self.computed,
            "agree": self.agree,
        }


def primordiality_trichotomy(G: FiniteGroup, char: int) -> TrichotomyReport:
    return TrichotomyReport(char, predicted_top_ideal(G, char), top_coefficient_ideal(G, char))

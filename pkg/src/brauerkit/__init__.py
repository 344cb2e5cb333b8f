"""Brauer relations, Burnside rings and primitive quotients of finite groups."""

from .burnside_ring import BurnsideElement, TableOfMarks, induce, inflate, multiply, restrict, table_of_marks
from .groupspec import parse_group_spec
from .perm_core import FiniteGroup, Permutation, Subgroup, generate_group, quotient_group
from .prim_quotient import predict_prim, prim_invariants, verify_classification
from .brauer_relations import relation_lattice, top_coefficient_ideal

__version__ = "0.1.0"

__all__ = [
    "BurnsideElement",
    "FiniteGroup",
    "Permutation",
    "Subgroup",
    "TableOfMarks",
    "generate_group",
    "induce",
    "inflate",
    "multiply",
    "parse_group_spec",
    "predict_prim",
    "prim_invariants",
    "quotient_group",
    "relation_lattice",
    "restrict",
    "table_of_marks",
    "top_coefficient_ideal",
    "verify_classification",
]

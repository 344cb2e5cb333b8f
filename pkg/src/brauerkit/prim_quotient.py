"""Imprimitive relations and the primitive quotient Prim(G) = K(G) / Imprim(G).

Imprim(G) is spanned by relations induced from proper subgroups and inflated
from proper quotients G/N, N a nontrivial normal subgroup (N = G included).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from . import group_classes as gc
from .burnside_ring import BurnsideElement, induce, inflate
from .exact_linalg import IntMatrix, QuotientInvariants, lattice_basis, lattice_sum, quotient_invariants
from .perm_core import FiniteGroup, QuotientMap, quotient_group
from .brauer_relations import check_characteristic, relation_lattice


def proper_subgroup_classes(G: FiniteGroup) -> list[int]:
    return list(range(len(G.lattice) - 1))


def proper_quotients(G: FiniteGroup) -> list[QuotientMap]:
    """One quotient map per nontrivial normal subgroup, in class order."""
    lat = G.lattice
    return [
        quotient_group(G, c.representative)
        for i, (c, normal) in enumerate(zip(lat.classes, lat.normal_flags))
        if normal and i > 0
    ]


def induced_relations(G: FiniteGroup, char: int) -> IntMatrix:
    rows = []
    for i in proper_subgroup_classes(G):
        H = G.lattice.representative(i)
        for x in relation_lattice(G.subgroup_group(H), char).elements():
            rows.append(induce(G, H, x).coeffs)
    return lattice_basis(rows, len(G.lattice))


def inflated_relations(G: FiniteGroup, char: int) -> IntMatrix:
    rows = []
    for q in proper_quotients(G):
        for x in relation_lattice(q.target, char).elements():
            rows.append(inflate(q, x).coeffs)
    return lattice_basis(rows, len(G.lattice))


def imprimitive_lattice(G: FiniteGroup, char: int) -> IntMatrix:
    cache = G._cache.setdefault("imprim", {})
    if char not in cache:
        n = len(G.lattice)
        cache[char] = lattice_sum([induced_relations(G, char), inflated_relations(G, char)], n)
    return cache[char]


def _top_first(G: FiniteGroup, basis: IntMatrix) -> tuple[list[int], list[list[int]]]:
    """Split the lattice into (row with minimal positive top coefficient, top-free rows)."""
    top = G.lattice.top
    perm = [top] + [j for j in range(basis.ncols) if j != top]
    H = lattice_basis([[r[j] for j in perm] for r in basis.rows], basis.ncols)

    def unpermute(r):
        out = [0] * len(r)
        for k, j in enumerate(perm):
            out[j] = r[k]
        return out

    rows = [unpermute(r) for r in H.rows]
    if rows and rows[0][top]:
        return rows[0], rows[1:]
    return [], rows


def generator_certificate(G: FiniteGroup, char: int) -> BurnsideElement | None:
    """A relation ``[G/G] + sum_{H < G} a_H [G/H]``, if one exists."""
    head, _ = _top_first(G, relation_lattice(G, char).basis)
    if head and head[G.lattice.top] == 1:
        return BurnsideElement(G, tuple(head))
    return None


def random_certificates(G: FiniteGroup, char: int, count: int, rng: random.Random) -> list[BurnsideElement]:
    """Random lattice members with top coefficient exactly 1."""
    head, rest = _top_first(G, relation_lattice(G, char).basis)
    if not head or head[G.lattice.top] != 1:
        return []
    out = []
    for _ in range(count):
        v = list(head)
        for r in rest:
            k = rng.randint(-3, 3)
            v = [a + k * b for a, b in zip(v, r)]
        out.append(BurnsideElement(G, tuple(v)))
    return out


def certificate_generates(G: FiniteGroup, char: int, x: BurnsideElement) -> bool:
    K = relation_lattice(G, char).basis
    n = len(G.lattice)
    return lattice_sum([imprimitive_lattice(G, char), IntMatrix((x.coeffs,), n)], n) == K


@dataclass(frozen=True)
class Prediction:
    kind: str  # "Z", "Z/q", "trivial" or "n/a"
    q: int | None = None
    reason: str = ""

    @property
    def applicable(self) -> bool:
        return self.kind != "n/a"

    def matches(self, inv: QuotientInvariants) -> bool:
        if self.kind == "Z":
            return inv.free_rank == 1 and not inv.torsion
        if self.kind == "Z/q":
            return inv.free_rank == 0 and inv.torsion == (self.q,)
        if self.kind == "trivial":
            return inv.is_trivial
        return True

    def __str__(self) -> str:
        if self.kind == "Z/q":
            return f"Z/{self.q}"
        if self.kind == "n/a":
            return f"n/a ({self.reason})"
        return self.kind

    def to_json(self) -> dict:
        return {"kind": self.kind, "q": self.q, "reason": self.reason, "text": str(self)}


def _in_base_class(Q: FiniteGroup, char: int) -> bool:
    return gc.is_cyclic(Q) if char == 0 else gc.is_p_hypo_elementary(Q, char)


def _class_primes(Q: FiniteGroup, char: int) -> list[int]:
    if char == 0:
        return [q for q in gc.prime_divisors(Q.order) if gc.is_q_quasi_elementary(Q, q)]
    return [q for q in gc.prime_divisors(Q.order) if gc.is_pq_dress(Q, char, q)]


def predict_prim(G: FiniteGroup, char: int) -> Prediction:
    char = check_characteristic(char)
    base = "cyclic" if char == 0 else f"{char}-hypo-elementary"
    if _in_base_class(G, char) or _class_primes(G, char):
        what = "quasi-elementary" if char == 0 else f"a ({char},q)-Dress group"
        return Prediction("n/a", reason=f"G is {what}")
    primes: set[int] = set()
    for q in proper_quotients(G):
        Q = q.target
        if _in_base_class(Q, char):
            continue
        qs = _class_primes(Q, char)
        if not qs:
            return Prediction("trivial", reason=f"quotient by a normal subgroup of order {q.kernel.order} is primordial for no prime")
        if len(qs) > 1:
            raise AssertionError(f"non-{base} quotient in the class for several primes {qs}")
        primes.add(qs[0])
    if not primes:
        return Prediction("Z", reason=f"all proper quotients are {base}")
    if len(primes) == 1:
        (q,) = primes
        return Prediction("Z/q", q, reason=f"all proper quotients lie in the class for q={q}")
    return Prediction("trivial", reason=f"proper quotients in the classes of distinct primes {sorted(primes)}")


@dataclass
class PrimReport:
    group: FiniteGroup
    characteristic: int
    k_rank: int
    imprim_rank: int
    invariants: QuotientInvariants
    quotient_ideal: int
    generator_certificate: BurnsideElement | None
    certificate_generates: bool | None
    predicted: Prediction
    k_basis: IntMatrix = field(repr=False)
    imprim_basis: IntMatrix = field(repr=False)

    @property
    def free_rank(self) -> int:
        return self.invariants.free_rank

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.invariants.torsion

    @property
    def agree(self) -> bool:
        if not self.predicted.applicable:
            return True
        return (
            self.predicted.matches(self.invariants)
            and self.generator_certificate is not None
            and bool(self.certificate_generates)
        )

    def to_json(self) -> dict:
        cert = self.generator_certificate
        return {
            "order": self.group.order,
            "characteristic": self.characteristic,
            "k_rank": self.k_rank,
            "imprim_rank": self.imprim_rank,
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "prim": str(self.invariants),
            "quotient_ideal": self.quotient_ideal,
            "generator_certificate": None if cert is None else cert.to_json(),
            "generator_certificate_readable": None if cert is None else str(cert),
            "certificate_generates": self.certificate_generates,
            "predicted": self.predicted.to_json(),
            "agree": self.agree,
        }


def quotient_top_ideal(G: FiniteGroup, char: int) -> int:
    """gcd of the top-coefficient ideals of all proper quotients."""
    g = 0
    for q in proper_quotients(G):
        g = gcd(g, relation_lattice(q.target, char).top_ideal)
    return g


def prim_invariants(G: FiniteGroup, char: int) -> PrimReport:
    char = check_characteristic(char)
    K = relation_lattice(G, char).basis
    imprim = imprimitive_lattice(G, char)
    inv = quotient_invariants(K, imprim)
    cert = generator_certificate(G, char)
    return PrimReport(
        group=G,
        characteristic=char,
        k_rank=K.nrows,
        imprim_rank=imprim.nrows,
        invariants=inv,
        quotient_ideal=quotient_top_ideal(G, char),
        generator_certificate=cert,
        certificate_generates=None if cert is None else certificate_generates(G, char, cert),
        predicted=predict_prim(G, char),
        k_basis=K,
        imprim_basis=imprim,
    )


def verify_classification(G: FiniteGroup, char: int) -> tuple[bool, PrimReport]:
    report = prim_invariants(G, char)
    return report.agree, report

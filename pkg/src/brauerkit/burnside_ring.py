"""The Burnside ring B(G): table of marks, products, induction, restriction, inflation.

Elements are integer vectors over the conjugacy classes of subgroups of a
group (see :class:`~brauerkit.perm_core.SubgroupLattice` for the ordering).
B(H) for a subgroup H lives on H's own standalone group, obtained with
:meth:`FiniteGroup.subgroup_group`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .perm_core import (
    FiniteGroup,
    NotSubgroup,
    QuotientMap,
    Subgroup,
    double_cosets,
    subgroup_correspondence,
)


class IntegralityViolation(ArithmeticError):
    pass


@dataclass(frozen=True)
class BurnsideElement:
    group: FiniteGroup
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != len(self.group.lattice):
            raise ValueError(
                f"{len(coeffs)} coefficients for {len(self.group.lattice)} subgroup classes"
            )

    @classmethod
    def zero(cls, G: FiniteGroup) -> BurnsideElement:
        return cls(G, (0,) * len(G.lattice))

    @classmethod
    def basis(cls, G: FiniteGroup, i: int) -> BurnsideElement:
        c = [0] * len(G.lattice)
        c[i] = 1
        return cls(G, tuple(c))

    @classmethod
    def one(cls, G: FiniteGroup) -> BurnsideElement:
        return cls.basis(G, G.lattice.top)

    def _check(self, other: BurnsideElement) -> None:
        if other.group is not self.group:
            raise ValueError("Burnside elements of different groups")

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._check(other)
        return BurnsideElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        self._check(other)
        return BurnsideElement(self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self.group, tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> BurnsideElement:
        return BurnsideElement(self.group, tuple(k * a for a in self.coeffs))

    def __mul__(self, other: BurnsideElement | int) -> BurnsideElement:
        if isinstance(other, BurnsideElement):
            return multiply(self, other)
        return other * self

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> list[list[int]]:
        lat = self.group.lattice
        return [[lat.classes[i].order, i, c] for i, c in enumerate(self.coeffs) if c]

    @classmethod
    def from_json(cls, G: FiniteGroup, data: Sequence[Sequence[int]]) -> BurnsideElement:
        c = [0] * len(G.lattice)
        for order, i, coeff in data:
            if G.lattice.classes[i].order != order:
                raise ValueError(f"class {i} has order {G.lattice.classes[i].order}, not {order}")
            c[i] += coeff
        return cls(G, tuple(c))

    def __str__(self) -> str:
        return format_combination(self.group, self.coeffs)


def class_label(G: FiniteGroup, i: int) -> str:
    lat = G.lattice
    if i == 0:
        return "1"
    if i == lat.top:
        return "G"
    return f"H{i}({lat.classes[i].order})"


def format_combination(G: FiniteGroup, coeffs: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{mag}[G/{class_label(G, i)}]"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


@dataclass(frozen=True, eq=False)
class TableOfMarks:
    group: FiniteGroup
    marks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.marks)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.marks]


def table_of_marks(G: FiniteGroup) -> TableOfMarks:
    """``marks[i][j] = #{g : g^-1 H_i g <= K_j} / |K_j|``, the fixed points of H_i on G/K_j."""
    tom = G._cache.get("tom")
    if tom is not None:
        return tom
    lat = G.lattice
    conj = G.conj
    rows = []
    for ci in lat.classes:
        images = conj[:, list(ci.representative.members)]
        row = []
        for cj in lat.classes:
            inside = np.zeros(G.order, dtype=bool)
            inside[list(cj.representative.members)] = True
            count = int(inside[images].all(axis=1).sum())
            m, r = divmod(count, cj.order)
            if r:
                raise IntegralityViolation("mark count not divisible by subgroup order")
            row.append(m)
        rows.append(tuple(row))
    tom = G._cache["tom"] = TableOfMarks(G, tuple(rows))
    return tom


def marks_of(x: BurnsideElement, tom: TableOfMarks | None = None) -> tuple[int, ...]:
    tom = tom or table_of_marks(x.group)
    return tuple(sum(m * c for m, c in zip(row, x.coeffs)) for row in tom.marks)


def from_marks(G: FiniteGroup, values: Sequence[int], tom: TableOfMarks | None = None) -> BurnsideElement:
    """Solve the (upper triangular) mark system for the coefficients."""
    tom = tom or table_of_marks(G)
    M = tom.marks
    n = len(M)
    c = [0] * n
    for i in range(n - 1, -1, -1):
        s = values[i] - sum(M[i][j] * c[j] for j in range(i + 1, n))
        q, r = divmod(s, M[i][i])
        if r:
            raise IntegralityViolation(f"mark vector {list(values)} is not in B(G)")
        c[i] = q
    return BurnsideElement(G, tuple(c))


def multiply(x: BurnsideElement, y: BurnsideElement, tom: TableOfMarks | None = None) -> BurnsideElement:
    x._check(y)
    tom = tom or table_of_marks(x.group)
    mx, my = marks_of(x, tom), marks_of(y, tom)
    return from_marks(x.group, [a * b for a, b in zip(mx, my)], tom)


def _embed_check(G: FiniteGroup, H: Subgroup, x: BurnsideElement) -> FiniteGroup:
    if not G.is_subgroup(H.members):
        raise NotSubgroup("not a subgroup")
    Hs = G.subgroup_group(H)
    if x.group is not Hs:
        raise NotSubgroup("element does not live on the given subgroup")
    return Hs


def induce(G: FiniteGroup, H: Subgroup, x: BurnsideElement) -> BurnsideElement:
    """``Ind_{G/H}``: ``[H/U] -> [G/U]``."""
    Hs = _embed_check(G, H, x)
    emb = G.embedding(Hs)
    lat = G.lattice
    out = [0] * len(lat)
    for c, cls in zip(x.coeffs, Hs.lattice.classes):
        if c:
            out[lat.class_of(emb[list(cls.representative.members)])] += c
    return BurnsideElement(G, tuple(out))


def restrict(G: FiniteGroup, H: Subgroup, x: BurnsideElement) -> BurnsideElement:
    """``Res_{G/H}``: ``[G/K] -> sum over HgK of [H / (H cap gKg^-1)]``."""
    if x.group is not G:
        raise ValueError("element does not live on G")
    if not G.is_subgroup(H.members):
        raise NotSubgroup("not a subgroup")
    Hs = G.subgroup_group(H)
    to_sub = np.full(G.order, -1, dtype=np.int64)
    to_sub[list(H.members)] = np.arange(H.order)
    out = [0] * len(Hs.lattice)
    for c, cls in zip(x.coeffs, G.lattice.classes):
        if not c:
            continue
        K = cls.representative
        for g in double_cosets(G, H, K):
            inter = H.mask & G.conjugate(K, g).mask
            idx = [to_sub[i] for i in range(G.order) if inter >> i & 1]
            out[Hs.lattice.class_of(idx)] += c
    return BurnsideElement(Hs, tuple(out))


def inflate(q: QuotientMap, xbar: BurnsideElement) -> BurnsideElement:
    """``Inf``: ``[Gbar/Hbar] -> [G/H]`` with ``H`` the full preimage of ``Hbar``."""
    if xbar.group is not q.target:
        raise ValueError("element does not live on the quotient")
    corr = _correspondence(q)
    out = [0] * len(q.source.lattice)
    for i, c in enumerate(xbar.coeffs):
        out[corr[i]] += c
    return BurnsideElement(q.source, tuple(out))


def _correspondence(q: QuotientMap) -> tuple[int, ...]:
    cache = q.source._cache.setdefault("correspondence", {})
    key = (id(q.target), q.element_map.tobytes())
    if key not in cache:
        cache[key] = subgroup_correspondence(q)
    return cache[key]


def coset_action(G: FiniteGroup, K: Subgroup) -> np.ndarray:
    """``action[g, c]``: the left coset hit by ``g`` applied to coset ``c`` of ``K``."""
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    ks = list(K.members)
    for g in range(G.order):
        if coset_of[g] < 0:
            coset_of[G.mul[g, ks]] = len(reps)
            reps.append(g)
    return coset_of[G.mul[:, reps]]


def burnside_of_action(G: FiniteGroup, action: np.ndarray) -> BurnsideElement:
    """Orbit decomposition of a G-set given as ``action[g, point]``."""
    npts = action.shape[1]
    seen = np.zeros(npts, dtype=bool)
    out = [0] * len(G.lattice)
    for pt in range(npts):
        if seen[pt]:
            continue
        seen[np.unique(action[:, pt])] = True
        stab = np.nonzero(action[:, pt] == pt)[0]
        out[G.lattice.class_of(stab)] += 1
    return BurnsideElement(G, tuple(out))


def pushforward_automorphism(G: FiniteGroup, alpha: np.ndarray, x: BurnsideElement) -> BurnsideElement:
    """``[G/U] -> [G/alpha(U)]`` for an automorphism given as an index map."""
    lat = G.lattice
    out = [0] * len(lat)
    for c, cls in zip(x.coeffs, lat.classes):
        if c:
            out[lat.class_of(alpha[list(cls.representative.members)])] += c
    return BurnsideElement(G, tuple(out))


def pullback_automorphism(G: FiniteGroup, alpha: np.ndarray, x: BurnsideElement) -> BurnsideElement:
    """The G-set ``X`` with twisted action ``g . s = alpha(g) s``, decomposed into orbits."""
    total = BurnsideElement.zero(G)
    for c, cls in zip(x.coeffs, G.lattice.classes):
        if c:
            twisted = coset_action(G, cls.representative)[alpha]
            total = total + c * burnside_of_action(G, twisted)
    return total

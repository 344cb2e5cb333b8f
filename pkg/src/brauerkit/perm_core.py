"""Finite permutation groups with fully enumerated elements.

Elements of a group are stored as image tuples, sorted lexicographically, so
the identity always has index 0.  Products compose as functions:
``(a * b)(i) == a(b(i))``.

Groups with the same element set are interned, so two independently
constructed copies of the same subgroup are the same Python object.  Burnside
ring elements rely on this for equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 200
MAX_ORDER_CAP = 2000
DEFAULT_LATTICE_CAP = 20000


class GroupError(Exception):
    pass


class DegreeMismatch(GroupError, ValueError):
    pass


class OrderCapExceeded(GroupError):
    pass


class LatticeCapExceeded(GroupError):
    pass


class NotNormal(GroupError, ValueError):
    pass


class NotSubgroup(GroupError, ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0, ..., degree-1}`` given by its image list."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise DegreeMismatch("cannot compose permutations of different degree")
        return Permutation(tuple(self.images[i] for i in other.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise DegreeMismatch(f"point {pt} out of range for degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated in cycle notation")
                seen.add(pt)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, degree: int, text: str) -> Permutation:
        """Parse cycle notation such as ``"(0 1)(2 3)"``; ``"()"`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s*,?\s*\d+)*)?\s*\))+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = [
            [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return cls.from_cycles(degree, [c for c in cycles if len(c) > 1])

    def cycles(self) -> list[tuple[int, ...]]:
        out, seen = [], set()
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[i] for i in b)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by the sorted element indices of its parent group."""

    members: tuple[int, ...]
    mask: int = field(compare=False, repr=False, default=0)

    def __post_init__(self) -> None:
        members = tuple(sorted(int(m) for m in self.members))
        object.__setattr__(self, "members", members)
        mask = 0
        for m in members:
            mask |= 1 << m
        object.__setattr__(self, "mask", mask)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def key(self) -> tuple[int, ...]:
        return self.members

    def __contains__(self, element: int) -> bool:
        return bool(self.mask >> element & 1)

    def issubset(self, other: Subgroup) -> bool:
        return self.mask & other.mask == self.mask


_INTERNED: dict[tuple, "FiniteGroup"] = {}


def clear_caches() -> None:
    """Forget every interned group and all derived data hanging off them."""
    _INTERNED.clear()


class FiniteGroup:
    """A permutation group with its full, canonically sorted element list.

    Construct through :func:`generate_group` (or the quotient and subgroup
    helpers); the constructor trusts its input.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Sequence[tuple[int, ...]],
    ) -> None:
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._cache: dict = {}
        arr = np.array(self.elements, dtype=np.int64).reshape(self.order, degree)
        keys = {row.tobytes(): i for i, row in enumerate(arr)}
        mul = np.empty((self.order, self.order), dtype=np.int64)
        for b in range(self.order):
            prod = arr[:, arr[b]]
            mul[:, b] = [keys[row.tobytes()] for row in prod]
        self.mul = mul
        self.mul.setflags(write=False)
        self.inv = np.argmin(mul, axis=1)  # identity is index 0
        self.inv.setflags(write=False)

    def __repr__(self) -> str:
        return f"<FiniteGroup degree={self.degree} order={self.order}>"

    def permutation(self, index: int) -> Permutation:
        return Permutation(self.elements[index])

    @cached_property
    def conj(self) -> np.ndarray:
        """``conj[g, x]`` is the index of ``g x g^-1``."""
        c = self.mul[self.mul, self.inv[:, None]]
        c.setflags(write=False)
        return c

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for g in range(self.order):
            k, x = 1, g
            while x != 0:
                x = int(self.mul[x, g])
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index[p.images] for p in self.generators)

    @property
    def lattice(self) -> SubgroupLattice:
        lat = self._cache.get("lattice")
        if lat is None:
            lat = self._cache["lattice"] = all_subgroups(self)
        return lat

    def whole(self) -> Subgroup:
        return Subgroup(tuple(range(self.order)))

    def trivial(self) -> Subgroup:
        return Subgroup((0,))

    def closure(self, gens: Iterable[int]) -> Subgroup:
        """Subgroup generated by the given element indices."""
        gens = [int(g) for g in gens if g != 0]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = int(self.mul[x, s])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(tuple(seen))

    def is_subgroup(self, members: Iterable[int]) -> bool:
        ms = set(members)
        if 0 not in ms:
            return False
        idx = np.fromiter(ms, dtype=np.int64)
        prods = self.mul[np.ix_(idx, idx)]
        return all(int(p) in ms for p in prods.ravel())

    def conjugate(self, H: Subgroup, g: int) -> Subgroup:
        """``g H g^-1``."""
        return Subgroup(tuple(int(x) for x in self.conj[g, list(H.members)]))

    def is_normal(self, H: Subgroup) -> bool:
        return all(self.conjugate(H, g) == H for g in self.generator_indices)

    def normalizer(self, H: Subgroup) -> Subgroup:
        return Subgroup(tuple(g for g in range(self.order) if self.conjugate(H, g) == H))

    def intersection(self, H: Subgroup, K: Subgroup) -> Subgroup:
        return Subgroup(tuple(sorted(set(H.members) & set(K.members))))

    def is_cyclic_subgroup(self, H: Subgroup) -> bool:
        orders = self.element_orders
        return any(orders[h] == H.order for h in H.members)

    def subgroup_group(self, H: Subgroup) -> FiniteGroup:
        """``H`` repackaged as a standalone group on the same points.

        Element ``i`` of the result is element ``H.members[i]`` of ``self``
        because both element lists are sorted.
        """
        gens: list[int] = []
        cur = Subgroup((0,))
        for m in H.members:
            if m not in cur:
                gens.append(m)
                cur = self.closure(gens)
        return _make_group(
            self.degree,
            [self.permutation(g) for g in gens],
            [self.elements[m] for m in H.members],
        )

    def embedding(self, K: FiniteGroup) -> np.ndarray:
        """Indices in ``self`` of the elements of ``K`` (which must lie in ``self``)."""
        cached = self._cache.setdefault("embeddings", {}).get(id(K))
        if cached is not None and cached[0] is K:
            return cached[1]
        if K.degree != self.degree:
            raise NotSubgroup("groups act on different point sets")
        try:
            emb = np.array([self.index[e] for e in K.elements], dtype=np.int64)
        except KeyError:
            raise NotSubgroup("not a subgroup of this group") from None
        emb.setflags(write=False)
        self._cache["embeddings"][id(K)] = (K, emb)
        return emb

    def as_subgroup(self, K: FiniteGroup) -> Subgroup:
        return Subgroup(tuple(int(i) for i in self.embedding(K)))


def _make_group(
    degree: int, generators: Sequence[Permutation], elements: Sequence[tuple[int, ...]]
) -> FiniteGroup:
    elements = tuple(sorted(elements))
    key = (degree, elements)
    G = _INTERNED.get(key)
    if G is None:
        G = _INTERNED[key] = FiniteGroup(degree, generators, elements)
    return G


def generate_group(
    degree: int, generators: Sequence[Permutation], cap: int = DEFAULT_ORDER_CAP
) -> FiniteGroup:
    """Close ``generators`` under composition and return the resulting group."""
    if degree < 1:
        raise DegreeMismatch("degree must be at least 1")
    gens = []
    for g in generators:
        if not isinstance(g, Permutation):
            g = Permutation(tuple(g))
        if g.degree != degree:
            raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
        gens.append(g)
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gen_images = [g.images for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gen_images:
                y = _compose(x, s)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise OrderCapExceeded(f"group order exceeds cap {cap}")
                    nxt.append(y)
        frontier = nxt
    return _make_group(degree, gens, seen)


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    members: tuple[Subgroup, ...]
    normalizer_order: int

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """Conjugacy classes of subgroups, ordered by (order, canonical key)."""

    group: FiniteGroup
    classes: tuple[SubgroupClass, ...]
    subconjugacy: tuple[tuple[bool, ...], ...]
    normal_flags: tuple[bool, ...]
    key_to_class: dict = field(repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def num_subgroups(self) -> int:
        return sum(c.size for c in self.classes)

    def class_of(self, H: Subgroup | Sequence[int]) -> int:
        key = H.members if isinstance(H, Subgroup) else tuple(sorted(int(h) for h in H))
        return self.key_to_class[key]

    def representative(self, i: int) -> Subgroup:
        return self.classes[i].representative

    @property
    def top(self) -> int:
        return len(self.classes) - 1

    def normal_subgroups(self) -> list[Subgroup]:
        return [c.representative for c, n in zip(self.classes, self.normal_flags) if n]


def _conjugacy_class(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    images = G.conj[:, list(H.members)]
    images = np.sort(images, axis=1)
    uniq = np.unique(images, axis=0)
    return [tuple(int(x) for x in row) for row in uniq]


def build_lattice(G: FiniteGroup, class_keys: Sequence[Sequence[tuple[int, ...]]]) -> SubgroupLattice:
    """Assemble a lattice from raw conjugacy classes (lists of member keys)."""
    raw = []
    for keys in class_keys:
        keys = sorted(tuple(k) for k in keys)
        raw.append(keys)
    raw.sort(key=lambda ks: (len(ks[0]), ks[0]))
    classes = []
    key_to_class = {}
    for i, keys in enumerate(raw):
        members = tuple(Subgroup(k) for k in keys)
        classes.append(SubgroupClass(members[0], members, G.order // len(members)))
        for k in keys:
            key_to_class[k] = i
    sub = tuple(
        tuple(any(m.issubset(cj.representative) for m in ci.members) for cj in classes)
        for ci in classes
    )
    normal = tuple(c.size == 1 for c in classes)
    return SubgroupLattice(G, tuple(classes), sub, normal, key_to_class)


def all_subgroups(G: FiniteGroup, cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Every subgroup of ``G``, grouped into conjugacy classes.

    Cyclic subgroups seed the search; class representatives are repeatedly
    joined with cyclic subgroups until nothing new appears.  Expanding one
    representative per class suffices because joins commute with conjugation.
    """
    cyclic: dict[tuple[int, ...], int] = {}
    for g in range(G.order):
        C = G.closure([g])
        cyclic.setdefault(C.members, g)
    cyclic_gens = sorted(cyclic.values())

    known: set[tuple[int, ...]] = set()
    class_keys: list[list[tuple[int, ...]]] = []
    queue: list[tuple[Subgroup, list[int]]] = []

    def register(H: Subgroup, gens: list[int]) -> None:
        keys = _conjugacy_class(G, H)
        known.update(keys)
        class_keys.append(keys)
        if len(known) > cap:
            raise LatticeCapExceeded(f"more than {cap} subgroups")
        queue.append((H, gens))

    for key, g in sorted(cyclic.items(), key=lambda kv: (len(kv[0]), kv[0])):
        if key not in known:
            register(Subgroup(key), [g] if g else [])
    while queue:
        H, gens = queue.pop()
        for g in cyclic_gens:
            if g in H:
                continue
            J = G.closure(gens + [g])
            if J.members not in known:
                register(J, gens + [g])
    return build_lattice(G, class_keys)


@dataclass(frozen=True, eq=False)
class QuotientMap:
    """A surjection ``source -> target`` with kernel ``kernel``.

    ``element_map[i]`` is the target index of source element ``i``.
    """

    source: FiniteGroup
    kernel: Subgroup
    target: FiniteGroup
    element_map: np.ndarray

    def preimage(self, members: Iterable[int]) -> Subgroup:
        wanted = np.zeros(self.target.order, dtype=bool)
        wanted[list(members)] = True
        return Subgroup(tuple(int(i) for i in np.nonzero(wanted[self.element_map])[0]))

    def image(self, H: Subgroup) -> Subgroup:
        return Subgroup(tuple({int(self.element_map[h]) for h in H.members}))

    def compose(self, other: QuotientMap) -> QuotientMap:
        """``other`` after ``self``: source of self onto target of other."""
        if other.source is not self.target:
            raise ValueError("maps do not compose")
        emap = other.element_map[self.element_map]
        emap.setflags(write=False)
        kernel = Subgroup(tuple(int(i) for i in np.nonzero(emap == 0)[0]))
        return QuotientMap(self.source, kernel, other.target, emap)


def quotient_group(G: FiniteGroup, N: Subgroup) -> QuotientMap:
    """``G -> G/N`` with ``G/N`` acting on the left cosets of ``N``."""
    if not G.is_subgroup(N.members):
        raise NotSubgroup("kernel is not a subgroup")
    if not G.is_normal(N):
        raise NotNormal("subgroup is not normal")
    cache = G._cache.setdefault("quotients", {})
    if N.members in cache:
        return cache[N.members]
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    nmem = list(N.members)
    for g in range(G.order):
        if coset_of[g] < 0:
            coset_of[G.mul[g, nmem]] = len(reps)
            reps.append(g)
    images = coset_of[G.mul[:, reps]]
    image_tuples = [tuple(int(x) for x in row) for row in images]
    gens = [Permutation(image_tuples[g]) for g in G.generator_indices]
    target = _make_group(len(reps), gens, set(image_tuples))
    emap = np.array([target.index[t] for t in image_tuples], dtype=np.int64)
    emap.setflags(write=False)
    q = cache[N.members] = QuotientMap(G, N, target, emap)
    return q


def subgroup_correspondence(q: QuotientMap) -> tuple[int, ...]:
    """Source class index of the full preimage of each target class."""
    src, tgt = q.source.lattice, q.target.lattice
    return tuple(src.class_of(q.preimage(c.representative.members)) for c in tgt.classes)


def double_cosets(G: FiniteGroup, H: Subgroup, K: Subgroup) -> list[int]:
    """Smallest element index of each double coset ``H g K``."""
    covered = np.zeros(G.order, dtype=bool)
    hs, ks = list(H.members), list(K.members)
    reps = []
    for g in range(G.order):
        if covered[g]:
            continue
        reps.append(g)
        covered[G.mul[G.mul[hs, g][:, None], ks]] = True
    return reps

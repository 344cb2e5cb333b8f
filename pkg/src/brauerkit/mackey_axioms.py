"""Property checks of the Mackey / Green functor-with-inflation axioms on B.

Each ``check_*`` evaluates both sides of one axiom and compares them exactly.
:func:`run_axiom_suite` samples configurations from a catalog with a seeded
generator and collects counterexamples.  The functor operations are looked up
through an :class:`Ops` bundle so that a deliberately broken operation can be
substituted to confirm the harness catches it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import burnside_ring as bs
from .burnside_ring import BurnsideElement
from .perm_core import FiniteGroup, QuotientMap, Subgroup, double_cosets, quotient_group

AXIOMS = ("MFI1", "MFI2", "MFI3", "MFI4", "MFI5", "MFI6", "GFI3")


@dataclass(frozen=True)
class Ops:
    induce: Callable = bs.induce
    restrict: Callable = bs.restrict
    inflate: Callable = bs.inflate
    multiply: Callable = bs.multiply


DEFAULT_OPS = Ops()


@dataclass
class AxiomReport:
    axiom: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "instances": self.instances,
            "failures": list(self.failures),
            "passed": self.passed,
        }


def _lift(G: FiniteGroup, H: Subgroup, U: Subgroup) -> Subgroup:
    """``U <= H`` given in H's standalone indexing, re-expressed in G's."""
    emb = G.embedding(G.subgroup_group(H))
    return Subgroup(tuple(int(emb[u]) for u in U.members))


def check_ind_transitivity(
    G: FiniteGroup, H: Subgroup, U: Subgroup, x: BurnsideElement, ops: Ops = DEFAULT_OPS
) -> bool:
    """``U <= H <= G`` with U in H's standalone indexing; x lives on U."""
    Hs = G.subgroup_group(H)
    two_step = ops.induce(G, H, ops.induce(Hs, U, x))
    one_step = ops.induce(G, _lift(G, H, U), x)
    return two_step == one_step


def check_res_transitivity(
    G: FiniteGroup, H: Subgroup, U: Subgroup, x: BurnsideElement, ops: Ops = DEFAULT_OPS
) -> bool:
    Hs = G.subgroup_group(H)
    two_step = ops.restrict(Hs, U, ops.restrict(G, H, x))
    one_step = ops.restrict(G, _lift(G, H, U), x)
    return two_step == one_step


def check_inf_transitivity(
    G: FiniteGroup, N: Subgroup, Mbar: Subgroup, x: BurnsideElement, ops: Ops = DEFAULT_OPS
) -> bool:
    """``G -> G/N -> (G/N)/Mbar`` against the composite surjection; x lives on the last."""
    q1 = quotient_group(G, N)
    q2 = quotient_group(q1.target, Mbar)
    two_step = ops.inflate(q1, ops.inflate(q2, x))
    one_step = ops.inflate(q1.compose(q2), x)
    return two_step == one_step


def check_inner_trivial(G: FiniteGroup, g: int, x: BurnsideElement) -> bool:
    """Conjugation by ``g`` acts as the identity, pushed forward and pulled back."""
    alpha = G.conj[g]
    return bs.pushforward_automorphism(G, alpha, x) == x and bs.pullback_automorphism(G, alpha, x) == x


def check_automorphism(G: FiniteGroup, alpha: np.ndarray, x: BurnsideElement) -> bool:
    """``F_*(alpha) == F^*(alpha^-1)``."""
    alpha_inv = np.empty_like(alpha)
    alpha_inv[alpha] = np.arange(len(alpha))
    return bs.pushforward_automorphism(G, alpha, x) == bs.pullback_automorphism(G, alpha_inv, x)


def mackey_sum(
    G: FiniteGroup, H: Subgroup, K: Subgroup, x: BurnsideElement, ops: Ops = DEFAULT_OPS
) -> BurnsideElement:
    """Right side of the Mackey formula for ``Res_{G/K} Ind_{G/H} x``.

    Sum over ``g`` in ``K\\G/H`` of ``Ind_K c_g Res_{H cap g^-1 K g} x``.
    """
    Hs, Ks = G.subgroup_group(H), G.subgroup_group(K)
    h_emb = G.embedding(Hs)
    to_h = {int(e): i for i, e in enumerate(h_emb)}
    total = BurnsideElement.zero(Ks)
    for g in double_cosets(G, K, H):
        g_inv = int(G.inv[g])
        L = G.intersection(H, G.conjugate(K, g_inv))
        L_in_h = Subgroup(tuple(to_h[i] for i in L.members))
        res = ops.restrict(Hs, L_in_h, x)
        Ls = Hs.subgroup_group(L_in_h)
        l_emb = G.embedding(Ls)
        out = [0] * len(Ks.lattice)
        for c, cls in zip(res.coeffs, Ls.lattice.classes):
            if c:
                V = Subgroup(tuple(int(l_emb[v]) for v in cls.representative.members))
                gVg = G.conjugate(V, g)
                out[Ks.lattice.class_of(G.embedding(Ks).searchsorted(gVg.members))] += c
        total = total + BurnsideElement(Ks, tuple(out))
    return total


def check_mackey(
    G: FiniteGroup, H: Subgroup, K: Subgroup, x: BurnsideElement, ops: Ops = DEFAULT_OPS
) -> bool:
    return ops.restrict(G, K, ops.induce(G, H, x)) == mackey_sum(G, H, K, x, ops)


def check_frobenius(
    G: FiniteGroup, H: Subgroup, x: BurnsideElement, y: BurnsideElement, ops: Ops = DEFAULT_OPS
) -> bool:
    left = ops.multiply(ops.induce(G, H, x), y)
    right = ops.induce(G, H, ops.multiply(x, ops.restrict(G, H, y)))
    return left == right


def inflation_to_subgroup(G: FiniteGroup, N: Subgroup, H: Subgroup) -> tuple[QuotientMap, Subgroup]:
    """The surjection ``H -> HN/N`` and the image ``HN/N`` inside ``G/N``."""
    q = quotient_group(G, N)
    Hbar = q.image(H)
    Hs, Hbar_s = G.subgroup_group(H), q.target.subgroup_group(Hbar)
    pos = {int(e): i for i, e in enumerate(q.target.embedding(Hbar_s))}
    emap = np.array([pos[int(q.element_map[h])] for h in G.embedding(Hs)], dtype=np.int64)
    emap.setflags(write=False)
    kernel = Subgroup(tuple(int(i) for i in np.nonzero(emap == 0)[0]))
    return QuotientMap(Hs, kernel, Hbar_s, emap), Hbar


def check_inf_ind_commute(
    G: FiniteGroup, N: Subgroup, H: Subgroup, xbar: BurnsideElement, ops: Ops = DEFAULT_OPS
) -> bool:
    """``Inf_{G/N} Ind_{Gbar/Hbar} xbar == Ind_{G/H} Inf_{H/(H cap N)} xbar``.

    The square commutes at the level of B only when ``N <= H`` (the kernel of
    ``G -> G/N`` lies in ``H``); otherwise the left side is ``[G/HN]``-based.
    """
    q = quotient_group(G, N)
    eps, Hbar = inflation_to_subgroup(G, N, H)
    left = ops.inflate(q, ops.induce(q.target, Hbar, xbar))
    right = ops.induce(G, H, ops.inflate(eps, xbar))
    return left == right


def random_element(G: FiniteGroup, rng: random.Random, max_terms: int = 4) -> BurnsideElement:
    n = len(G.lattice)
    coeffs = [0] * n
    for i in rng.sample(range(n), min(n, rng.randint(1, max_terms))):
        coeffs[i] = rng.randint(-3, 3)
    return BurnsideElement(G, tuple(coeffs))


def random_subgroup(G: FiniteGroup, rng: random.Random) -> Subgroup:
    cls = rng.choice(G.lattice.classes)
    return rng.choice(cls.members)


def run_axiom_suite(
    catalog: Sequence[FiniteGroup], samples: int, seed: int, ops: Ops = DEFAULT_OPS
) -> list[AxiomReport]:
    reports = {a: AxiomReport(a) for a in AXIOMS}
    groups = list(catalog)
    for a in AXIOMS:
        rng = random.Random(f"{seed}:{a}")
        for k in range(samples):
            G = rng.choice(groups)
            ok, desc = _sample(a, G, rng, ops)
            reports[a].instances += 1
            if not ok:
                reports[a].failures.append(f"sample {k}: |G|={G.order} {desc}")
    return [reports[a] for a in AXIOMS]


def _members(S: Subgroup) -> str:
    return "[" + ",".join(map(str, S.members)) + "]"


def _sample(axiom: str, G: FiniteGroup, rng: random.Random, ops: Ops) -> tuple[bool, str]:
    if axiom in ("MFI1", "MFI2"):
        H = random_subgroup(G, rng)
        Hs = G.subgroup_group(H)
        U = random_subgroup(Hs, rng)
        if axiom == "MFI1":
            x = random_element(Hs.subgroup_group(U), rng)
            desc = f"H={_members(H)} U={_members(U)} x={x.coeffs}"
            return check_ind_transitivity(G, H, U, x, ops), desc
        x = random_element(G, rng)
        desc = f"H={_members(H)} U={_members(U)} x={x.coeffs}"
        ok = check_res_transitivity(G, H, U, x, ops)
        # inflation half of the axiom on a normal chain N <= M
        N = rng.choice(G.lattice.normal_subgroups())
        q1 = quotient_group(G, N)
        Mbar = rng.choice(q1.target.lattice.normal_subgroups())
        Q2 = quotient_group(q1.target, Mbar).target
        y = random_element(Q2, rng)
        ok = ok and check_inf_transitivity(G, N, Mbar, y, ops)
        return ok, desc + f" N={_members(N)} Mbar={_members(Mbar)} y={y.coeffs}"
    if axiom == "MFI3":
        x = random_element(G, rng)
        g = rng.randrange(G.order)
        return check_inner_trivial(G, g, x), f"g={g} x={x.coeffs}"
    if axiom == "MFI4":
        # automorphisms of a subgroup H induced by conjugation in its normaliser
        H = random_subgroup(G, rng)
        n = rng.choice(G.normalizer(H).members)
        Hs = G.subgroup_group(H)
        pos = {m: i for i, m in enumerate(H.members)}
        alpha = np.array([pos[int(G.conj[n, h])] for h in H.members], dtype=np.int64)
        x = random_element(Hs, rng)
        return check_automorphism(Hs, alpha, x), f"H={_members(H)} n={n} x={x.coeffs}"
    if axiom == "MFI5":
        H, K = random_subgroup(G, rng), random_subgroup(G, rng)
        x = random_element(G.subgroup_group(H), rng)
        return check_mackey(G, H, K, x, ops), f"H={_members(H)} K={_members(K)} x={x.coeffs}"
    if axiom == "MFI6":
        N = rng.choice(G.lattice.normal_subgroups())
        H = rng.choice([S for c in G.lattice.classes for S in c.members if N.issubset(S)])
        _, Hbar = inflation_to_subgroup(G, N, H)
        xbar = random_element(quotient_group(G, N).target.subgroup_group(Hbar), rng)
        desc = f"N={_members(N)} H={_members(H)} xbar={xbar.coeffs}"
        return check_inf_ind_commute(G, N, H, xbar, ops), desc
    if axiom == "GFI3":
        H = random_subgroup(G, rng)
        x = random_element(G.subgroup_group(H), rng)
        y = random_element(G, rng)
        desc = f"H={_members(H)} x={x.coeffs} y={y.coeffs}"
        return check_frobenius(G, H, x, y, ops), desc
    raise ValueError(f"unknown axiom {axiom}")

"""Group-class predicates: cyclic, q-quasi-elementary, p-hypo-elementary, (p,q)-Dress.

Every predicate is decided by scanning the normal subgroups of the lattice.
A "p-power" includes ``p**0``, so the trivial subgroup always qualifies as a
normal p-subgroup and an index of 1 counts as a q-power.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perm_core import FiniteGroup, Subgroup


class NotPrime(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _check_prime(*ps: int) -> None:
    for p in ps:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")


def prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def is_cyclic(G: FiniteGroup) -> bool:
    return G.order in G.element_orders


def quotient_is_cyclic(G: FiniteGroup, N: Subgroup, M: Subgroup | None = None) -> bool:
    """Whether ``M/N`` is cyclic (``M`` defaults to ``G``), for ``N`` normal in ``M``.

    Cyclic means some coset ``mN`` has order ``[M:N]``.
    """
    members = range(G.order) if M is None else M.members
    index = len(members) // N.order
    for g in members:
        k, x = 1, g
        while x not in N:
            x = int(G.mul[x, g])
            k += 1
        if k == index:
            return True
    return False


def _normal_containing(G: FiniteGroup, P: Subgroup) -> list[Subgroup]:
    return [M for M in G.lattice.normal_subgroups() if P.issubset(M)]


def _quotient_is_q_quasi_elementary(G: FiniteGroup, P: Subgroup, q: int) -> bool:
    # normal subgroups of G/P correspond to normal M >= P of G
    for M in _normal_containing(G, P):
        if not is_power_of(G.order // M.order, q):
            continue
        if quotient_is_cyclic(G, P, M):
            return True
    return False


def _normal_p_subgroups(G: FiniteGroup, p: int) -> list[Subgroup]:
    return [N for N in G.lattice.normal_subgroups() if is_power_of(N.order, p)]


def is_q_quasi_elementary(G: FiniteGroup, q: int) -> bool:
    _check_prime(q)
    return _quotient_is_q_quasi_elementary(G, G.trivial(), q)


def is_quasi_elementary(G: FiniteGroup) -> bool:
    if is_cyclic(G):
        return True
    return any(is_q_quasi_elementary(G, q) for q in prime_divisors(G.order))


def is_p_hypo_elementary(G: FiniteGroup, p: int) -> bool:
    _check_prime(p)
    return any(quotient_is_cyclic(G, P) for P in _normal_p_subgroups(G, p))


def is_pq_dress(G: FiniteGroup, p: int, q: int) -> bool:
    _check_prime(p, q)
    return any(_quotient_is_q_quasi_elementary(G, P, q) for P in _normal_p_subgroups(G, p))


def is_dress_for_some_q(G: FiniteGroup, p: int) -> bool:
    # a non-hypo-elementary (p,q)-Dress group has a non-cyclic quotient of q-power
    # index over a cyclic normal subgroup, so q divides |G|
    if is_p_hypo_elementary(G, p):
        return True
    return any(is_pq_dress(G, p, q) for q in prime_divisors(G.order))


@dataclass
class ClassReport:
    is_cyclic: bool
    quasi_elementary_primes: set[int]
    hypo_elementary_primes: set[int]
    dress_pairs: dict[int, set[int]] = field(default_factory=dict)
    contradiction: bool = False

    def to_json(self) -> dict:
        return {
            "cyclic": self.is_cyclic,
            "quasi_elementary_primes": sorted(self.quasi_elementary_primes),
            "hypo_elementary_primes": sorted(self.hypo_elementary_primes),
            "dress_pairs": {str(p): sorted(qs) for p, qs in sorted(self.dress_pairs.items())},
            "contradiction": self.contradiction,
        }


def classify(G: FiniteGroup, relevant_primes: list[int]) -> ClassReport:
    if not relevant_primes:
        raise ValueError("need at least one prime")
    _check_prime(*relevant_primes)
    missing = set(prime_divisors(G.order)) - set(relevant_primes)
    if missing:
        raise ValueError(f"primes dividing |G| missing from query: {sorted(missing)}")
    primes = sorted(set(relevant_primes))
    cyc = is_cyclic(G)
    qe = {q for q in primes if is_q_quasi_elementary(G, q)}
    he = {p for p in primes if is_p_hypo_elementary(G, p)}
    dress = {p: {q for q in primes if is_pq_dress(G, p, q)} for p in primes}
    contradiction = (len(qe) > 1 and not cyc) or any(
        len(qs) > 1 and p not in he for p, qs in dress.items()
    )
    return ClassReport(cyc, qe, he, dress, contradiction)

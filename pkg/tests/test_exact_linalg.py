from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauerkit.exact_linalg import (
    DimensionMismatch,
    IntMatrix,
    NotSublattice,
    coordinate_ideal,
    determinant,
    hnf,
    in_lattice,
    kernel_basis,
    lattice_basis,
    lattice_sum,
    quotient_invariants,
    rank,
    snf,
    solve_in_lattice,
)


@st.composite
def matrices(draw, max_dim: int = 6, bound: int = 9):
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m))
    return IntMatrix.of(rows, n)


def is_hnf(H: IntMatrix) -> bool:
    last = -1
    seen_zero = False
    for r in H.rows:
        nz = [j for j, x in enumerate(r) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        p = nz[0]
        if p <= last or r[p] <= 0:
            return False
        for above in H.rows[: H.rows.index(r)]:
            if not 0 <= above[p] < r[p]:
                return False
        last = p
    return True


def test_examples_hnf():
    assert hnf(IntMatrix.identity(3))[0] == IntMatrix.identity(3)
    assert hnf([[2, 4], [1, 3]])[0].tolist() == [[1, 1], [0, 2]]
    assert hnf(IntMatrix.zeros(2, 3))[0] == IntMatrix.zeros(2, 3)


def test_examples_snf():
    assert snf([[6, 0], [0, 4]]).invariant_factors == (2, 12)
    assert snf(IntMatrix.identity(3)).invariant_factors == (1, 1, 1)
    assert snf(IntMatrix.zeros(2, 2)).rank == 0


def test_examples_kernel():
    assert kernel_basis([[1, 1, 1]]).tolist() == [[1, 0, -1], [0, 1, -1]]
    assert kernel_basis([[2, 1], [1, 1]]).nrows == 0
    assert kernel_basis([[0, 0, 0]]) == IntMatrix.identity(3)


def test_examples_lattice_sum():
    e1, e2 = IntMatrix.of([[1, 0]]), IntMatrix.of([[0, 1]])
    assert lattice_sum([e1, e2], 2) == IntMatrix.identity(2)
    assert lattice_sum([IntMatrix.of([[2, 0]]), IntMatrix.of([[0, 3]])], 2).tolist() == [[2, 0], [0, 3]]
    assert lattice_sum([IntMatrix.of([[2, 2]]), IntMatrix.of([[2, -2]])], 2).tolist() == [[2, 2], [0, 4]]
    with pytest.raises(DimensionMismatch):
        lattice_sum([IntMatrix.of([[1, 0, 0]])], 2)


def test_examples_quotient_invariants():
    Z2 = IntMatrix.identity(2)
    inv = quotient_invariants(Z2, IntMatrix.of([[2, 0], [0, 3]]))
    assert inv.torsion == (6,) and inv.free_rank == 0 and str(inv) == "Z/6"
    assert quotient_invariants(Z2, Z2).is_trivial
    inv = quotient_invariants(Z2, IntMatrix((), 2))
    assert inv.free_rank == 2 and inv.torsion == () and str(inv) == "Z x Z"
    with pytest.raises(NotSublattice):
        quotient_invariants(IntMatrix.of([[2, 0]]), IntMatrix.of([[1, 0]]))


def test_examples_coordinate_ideal():
    assert coordinate_ideal(IntMatrix.of([[2, 1], [0, 5]]), 0) == 2
    assert coordinate_ideal(IntMatrix((), 2), 0) == 0
    assert coordinate_ideal(lattice_basis([[4, 0], [6, 1]], 2), 0) == 2


def test_solve_in_lattice():
    B = lattice_basis([[2, 2], [0, 4]], 2)
    assert solve_in_lattice(B, [4, 8]) is not None
    assert not in_lattice(B, [1, 1])
    assert not in_lattice(B, [2, 0])


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_hnf_properties(A):
    H, U = hnf(A)
    assert U @ A == H
    assert abs(determinant(U)) == 1
    assert is_hnf(H)
    # canonical: the HNF depends only on the row lattice
    assert hnf(U @ A)[0] == H
    assert hnf(IntMatrix.of(list(reversed(A.rows)), A.ncols))[0] == H


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_snf_properties(A):
    S = snf(A)
    assert S.U @ A @ S.V == S.D
    assert abs(determinant(S.U)) == 1 and abs(determinant(S.V)) == 1
    m, n = A.shape
    assert all(S.D[i, j] == 0 for i in range(m) for j in range(n) if i != j)
    d = S.invariant_factors
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert S.rank == rank(A)


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_kernel_properties(A):
    K = kernel_basis(A)
    n = A.ncols
    assert K.nrows == n - rank(A)
    for row in K.rows:
        assert all(sum(a * x for a, x in zip(arow, row)) == 0 for arow in A.rows)
    # saturation: every small kernel vector lies in the computed lattice
    for v in itertools.product(range(-2, 3), repeat=min(n, 3)):
        v = list(v) + [0] * (n - len(v))
        if all(sum(a * x for a, x in zip(arow, v)) == 0 for arow in A.rows):
            assert in_lattice(K, v)


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_quotient_two_routes(A):
    n = A.ncols
    Zn = IntMatrix.identity(n)
    S = snf(A)
    # Z^n / row space of A read off the Smith form
    inv = quotient_invariants(Zn, lattice_basis(A.rows, n))
    assert inv.torsion == tuple(d for d in S.invariant_factors if d > 1)
    assert inv.free_rank == n - S.rank
    # Z^n / ker A is the (free) image of A
    inv = quotient_invariants(Zn, kernel_basis(A))
    assert inv.torsion == () and inv.free_rank == S.rank

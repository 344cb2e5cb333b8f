"""Exact integer matrices: Hermite and Smith normal forms, kernels, lattices.

Lattices are represented by HNF bases (row style, positive pivots, entries
above a pivot reduced into ``[0, pivot)``), so two lattices are equal exactly
when their bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class DimensionMismatch(ValueError):
    pass


class NotSublattice(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        for r in rows:
            if len(r) != self.ncols:
                raise DimensionMismatch(f"row of length {len(r)} in a {self.ncols}-column matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionMismatch("column count of an empty matrix is ambiguous")
            ncols = len(rows[0])
        return cls(tuple(tuple(r) for r in rows), ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, m: int, n: int) -> IntMatrix:
        return cls(tuple((0,) * n for _ in range(m)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.nrows
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows),
            other.ncols,
        )

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.rows]

    def nonzero_rows(self) -> IntMatrix:
        return IntMatrix(tuple(r for r in self.rows if any(r)), self.ncols)


def _as_matrix(A: IntMatrix | Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    return A if isinstance(A, IntMatrix) else IntMatrix.of(A, ncols)


def _det(M: list[list[int]]) -> int:
    # Bareiss fraction-free elimination
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def determinant(A: IntMatrix) -> int:
    if A.nrows != A.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    return _det(A.tolist())


def hnf(A: IntMatrix | Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form ``H`` with unimodular ``U``, ``U @ A == H``.

    Zero rows of ``H`` sit at the bottom.
    """
    A = _as_matrix(A)
    m, n = A.shape
    H = A.tolist()
    U = IntMatrix.identity(m).tolist()

    def sub(i: int, k: int, q: int) -> None:
        if q:
            Hi, Hk, Ui, Uk = H[i], H[k], U[i], U[k]
            for c in range(n):
                Hi[c] -= q * Hk[c]
            for c in range(m):
                Ui[c] -= q * Uk[c]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(H[i][c]))
            H[r], H[piv] = H[piv], H[r]
            U[r], U[piv] = U[piv], U[r]
            clean = True
            for i in range(r + 1, m):
                if H[i][c]:
                    sub(i, r, H[i][c] // H[r][c])
                    clean = clean and not H[i][c]
            if clean:
                break
        if not H[r][c]:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            sub(i, r, H[i][c] // H[r][c])
        r += 1
    return IntMatrix.of(H, n), IntMatrix.of(U, m)


@dataclass(frozen=True)
class SmithDecomposition:
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Nonzero diagonal entries ``d_1 | d_2 | ...``."""
        k = min(self.D.shape)
        return tuple(self.D[i, i] for i in range(k) if self.D[i, i])

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def snf(A: IntMatrix | Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with unimodular transforms, ``U @ A @ V == D``."""
    A = _as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def row_sub(i: int, k: int, q: int) -> None:
        for c in range(n):
            D[i][c] -= q * D[k][c]
        for c in range(m):
            U[i][c] -= q * U[k][c]

    def col_sub(j: int, k: int, q: int) -> None:
        for r in range(m):
            D[r][j] -= q * D[r][k]
        for r in range(n):
            V[r][j] -= q * V[r][k]

    def row_swap(i: int, k: int) -> None:
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def col_swap(j: int, k: int) -> None:
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    for t in range(min(m, n)):
        entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        row_swap(t, i)
        col_swap(t, j)
        while True:
            for i in range(t + 1, m):
                if D[i][t]:
                    row_sub(i, t, D[i][t] // D[t][t])
            for j in range(t + 1, n):
                if D[t][j]:
                    col_sub(j, t, D[t][j] // D[t][t])
            rest = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, i, j = min(rest)
                if i != t:
                    row_swap(t, i)
                else:
                    col_swap(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            # pull a non-divisible row into the pivot row and reduce again
            row_sub(t, bad, -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return SmithDecomposition(IntMatrix.of(D, n), IntMatrix.of(U, m), IntMatrix.of(V, n))


def lattice_basis(rows: Iterable[Sequence[int]], ncols: int) -> IntMatrix:
    """HNF basis of the lattice spanned by ``rows``."""
    rows = [list(r) for r in rows]
    if not rows:
        return IntMatrix((), ncols)
    H, _ = hnf(IntMatrix.of(rows, ncols))
    return H.nonzero_rows()


def kernel_basis(A: IntMatrix | Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """HNF basis of ``{x in Z^cols : A x = 0}``."""
    A = _as_matrix(A, ncols)
    n = A.ncols
    if A.nrows == 0:
        return IntMatrix.identity(n)
    H, U = hnf(A.transpose())
    kernel = [U.rows[i] for i in range(n) if not any(H.rows[i])]
    return lattice_basis(kernel, n)


def lattice_sum(bases: Sequence[IntMatrix], ambient_dim: int) -> IntMatrix:
    rows = []
    for B in bases:
        if B.ncols != ambient_dim:
            raise DimensionMismatch(f"basis with {B.ncols} columns in Z^{ambient_dim}")
        rows.extend(B.rows)
    return lattice_basis(rows, ambient_dim)


def _pivots(H: IntMatrix) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in H.rows]


def solve_in_lattice(basis: IntMatrix, v: Sequence[int]) -> list[int] | None:
    """Integer coordinates of ``v`` in an HNF ``basis``, or None if ``v`` is outside."""
    if len(v) != basis.ncols:
        raise DimensionMismatch("vector length does not match lattice dimension")
    rest = list(v)
    coords = []
    for row, p in zip(basis.rows, _pivots(basis)):
        q, r = divmod(rest[p], row[p])
        # entries left of the pivot must already be cleared
        if r or any(rest[:p]):
            return None
        coords.append(q)
        if q:
            rest = [a - q * b for a, b in zip(rest, row)]
    if any(rest):
        return None
    return coords


def in_lattice(basis: IntMatrix, v: Sequence[int]) -> bool:
    return solve_in_lattice(basis, v) is not None


@dataclass(frozen=True)
class QuotientInvariants:
    """``Z^free_rank x Z/d_1 x ... x Z/d_k`` with ``1 < d_1 | d_2 | ...``."""

    torsion: tuple[int, ...]
    free_rank: int

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and not self.free_rank

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "trivial"


def quotient_invariants(big: IntMatrix, small: IntMatrix) -> QuotientInvariants:
    """Invariants of ``L1/L2`` for HNF bases ``big`` of ``L1`` and ``small`` of ``L2``."""
    big = lattice_basis(big.rows, big.ncols)
    coords = []
    for row in small.rows:
        c = solve_in_lattice(big, row)
        if c is None:
            raise NotSublattice(f"{list(row)} is not in the larger lattice")
        coords.append(c)
    factors = snf(IntMatrix.of(coords, big.nrows)).invariant_factors if coords else ()
    return QuotientInvariants(tuple(d for d in factors if d > 1), big.nrows - len(factors))


def coordinate_ideal(L: IntMatrix, coord: int) -> int:
    """Generator ``g >= 0`` of the ideal ``{x[coord] : x in L}``."""
    if not 0 <= coord < L.ncols:
        raise IndexError(coord)
    g = 0
    for r in L.rows:
        g = gcd(g, r[coord])
    return g


def rank(A: IntMatrix) -> int:
    return hnf(A)[0].nonzero_rows().nrows if A.nrows else 0

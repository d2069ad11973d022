"""Exact integer and rational linear algebra.

Everything here works on plain Python ints and :class:`fractions.Fraction`,
so entries never overflow.  Matrices are small (a few dozen rows at most),
so the algorithms favour clarity over asymptotics.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Matrix = list[list[int]]


@dataclass(frozen=True)
class IntegerMatrix:
    """Integer matrix with an explicit shape, so ``2 x 0`` and ``0 x 3`` exist."""

    nrows: int
    ncols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(entries) != self.nrows or any(len(r) != self.ncols for r in entries):
            raise ValueError(f"entries do not match shape {self.nrows}x{self.ncols}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(map(tuple, rows)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: int) -> IntegerMatrix:
        cols = [list(c) for c in cols]
        if any(len(c) != nrows for c in cols):
            raise ValueError(f"every column needs {nrows} entries")
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(nrows, len(cols), rows)

    def to_lists(self) -> Matrix:
        return [list(r) for r in self.entries]


def _as_matrix(a) -> IntegerMatrix:
    return a if isinstance(a, IntegerMatrix) else IntegerMatrix.from_rows(a)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(ncols)] for i in range(len(a))]


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; exact for integer input."""
    m = [list(r) for r in a]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# -- Smith normal form -------------------------------------------------------


def smith_normal_form(a) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` and ``U``, ``V`` unimodular.

    ``D`` is diagonal with nonnegative entries ``d_1 | d_2 | ...`` (zeros last).
    Pivots are chosen as the smallest nonzero entry in the remaining block,
    which keeps intermediate entries small.
    """
    A = _as_matrix(a)
    m, n = A.nrows, A.ncols
    D = A.to_lists()
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        D[dst] = [x + k * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col_dst += k * col_src
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return U, D, V
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue  # a remainder is now smaller than p; re-pivot
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


def invariant_factors(a) -> list[int]:
    """Diagonal of the Smith normal form (length ``min(rows, cols)``)."""
    _, D, _ = smith_normal_form(a)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank ⊕ Z_d1 ⊕ ... ⊕ Z_dk`` with ``d1 | d2 | ... | dk`` and all ``di >= 2``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in torsion):
            raise ValueError(f"torsion factors must be >= 2, got {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion factors must form a divisibility chain, got {torsion}")
        object.__setattr__(self, "torsion", torsion)

    @classmethod
    def from_factors(cls, factors: Iterable[int], extra_rank: int = 0) -> AbelianGroup:
        """Canonicalize a list of invariant factors: 0 -> free summand, 1 dropped."""
        rank, torsion = extra_rank, []
        for d in factors:
            d = abs(int(d))
            if d == 0:
                rank += 1
            elif d > 1:
                torsion.append(d)
        return cls(rank, tuple(sorted(torsion)))

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"


def cokernel(a) -> AbelianGroup:
    """``Z^rows`` modulo the span of the columns of ``a``."""
    A = _as_matrix(a)
    if A.ncols == 0 or A.nrows == 0:
        return AbelianGroup(A.nrows)
    factors = invariant_factors(A)
    # rows beyond min(rows, cols) are free
    return AbelianGroup.from_factors(factors, extra_rank=A.nrows - len(factors))


# -- rational linear algebra -------------------------------------------------


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : M x = 0}`` over Q, via reduced row echelon form."""
    M = [[Fraction(x) for x in r] for r in rows]
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][fc]
        basis.append(v)
    return basis


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    return n - len(nullspace(rows, n))


@dataclass(frozen=True)
class RationalSymmetricForm:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        n = len(entries)
        if any(len(r) != n for r in entries):
            raise ValueError("form matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise ValueError(f"form is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", entries)

    @property
    def dimension(self) -> int:
        return len(self.entries)


def form_signature(q) -> int:
    """Signature (#positive - #negative) by exact congruence diagonalization.

    When every remaining diagonal entry vanishes but some ``q_ij != 0``, the
    basis vector ``e_i`` is replaced by ``e_i + e_j`` so the new diagonal
    entry ``2 q_ij`` can serve as a pivot.
    """
    if not isinstance(q, RationalSymmetricForm):
        q = RationalSymmetricForm(tuple(map(tuple, q)))
    Q = [list(r) for r in q.entries]
    n = len(Q)
    sig = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if Q[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if Q[i][j] != 0), None)
            if pair is None:
                break  # remaining block is zero
            i, j = pair
            for k in range(n):
                Q[i][k] += Q[j][k]
            for k in range(n):
                Q[k][i] += Q[k][j]
            p = i
        d = Q[p][p]
        sig += 1 if d > 0 else -1
        active.remove(p)
        for i in active:
            if Q[i][p] != 0:
                f = Q[i][p] / d
                for k in active:
                    Q[i][k] -= f * Q[p][k]
                Q[i][p] = Fraction(0)
        for k in active:
            Q[p][k] = Fraction(0)
    return sig

"""First homology of a closed oriented surface and the action of Dehn twists on it.

Basis order is interleaved, ``(a_1, b_1, a_2, b_2, ..., a_g, b_g)``, with
``<a_i, b_i> = +1`` and all other basis pairings zero.  A right-handed Dehn
twist about a curve of class ``c`` acts by the transvection
``x -> x + <x, c> c``.

Words of twists act left to right: the word ``t_1 t_2`` applies ``t_1`` first,
so its matrix is ``T_2 @ T_1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .linalg import determinant

Rows = tuple[tuple[int, ...], ...]


class SurfaceMismatch(ValueError):
    """Raised when objects living on surfaces of different genus are combined."""


@dataclass(frozen=True)
class Surface:
    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError(f"genus must be a positive integer, got {self.genus!r}")

    @property
    def rank(self) -> int:
        return 2 * self.genus

    def zero(self) -> HomologyClass:
        return HomologyClass(self, (0,) * self.rank)

    def _basis(self, offset: int, i: int) -> HomologyClass:
        if not 1 <= i <= self.genus:
            raise IndexError(f"handle index {i} outside 1..{self.genus}")
        coords = [0] * self.rank
        coords[2 * (i - 1) + offset] = 1
        return HomologyClass(self, tuple(coords))

    def a(self, i: int) -> HomologyClass:
        return self._basis(0, i)

    def b(self, i: int) -> HomologyClass:
        return self._basis(1, i)

    def vector(self, coords: Iterable[int]) -> HomologyClass:
        return HomologyClass(self, tuple(coords))

    def form(self) -> Rows:
        """The intersection form ``J`` as a matrix, ``<x, y> = x^T J y``."""
        n = self.rank
        rows = [[0] * n for _ in range(n)]
        for i in range(self.genus):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = -1
        return tuple(tuple(r) for r in rows)

    def identity(self) -> SymplecticMatrix:
        return SymplecticMatrix(self, _identity_rows(self.rank), check=False)


def _check_same(s: Surface, t: Surface) -> None:
    if s != t:
        raise SurfaceMismatch(f"genus {s.genus} vs genus {t.genus}")


def _pair(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(x[k] * y[k + 1] - x[k + 1] * y[k] for k in range(0, len(x), 2))


@dataclass(frozen=True)
class HomologyClass:
    surface: Surface
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.surface.rank:
            raise ValueError(
                f"class needs {self.surface.rank} coordinates on genus "
                f"{self.surface.genus}, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    def __add__(self, other: HomologyClass) -> HomologyClass:
        _check_same(self.surface, other.surface)
        return HomologyClass(self.surface, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: HomologyClass) -> HomologyClass:
        return self + (-other)

    def __neg__(self) -> HomologyClass:
        return HomologyClass(self.surface, tuple(-x for x in self.coords))

    def __mul__(self, k: int) -> HomologyClass:
        return HomologyClass(self.surface, tuple(k * x for x in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return f"HomologyClass(g={self.surface.genus}, {list(self.coords)})"


def intersection_pairing(x: HomologyClass, y: HomologyClass) -> int:
    """Algebraic intersection number ``x^T J y``."""
    _check_same(x.surface, y.surface)
    return _pair(x.coords, y.coords)


def _identity_rows(n: int) -> Rows:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Rows, b: Rows) -> Rows:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _is_symplectic_rows(m: Rows) -> bool:
    n = len(m)
    cols = list(zip(*m))
    for i in range(n):
        for j in range(n):
            want = 0
            if i % 2 == 0 and j == i + 1:
                want = 1
            elif i % 2 == 1 and j == i - 1:
                want = -1
            if _pair(cols[i], cols[j]) != want:
                return False
    return True


def is_symplectic(m: Sequence[Sequence[int]]) -> bool:
    """True iff ``M^T J M = J`` for the standard form of matching size."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n % 2:
        raise ValueError(f"symplectic test needs even dimension, got {n}")
    return _is_symplectic_rows(tuple(tuple(int(x) for x in row) for row in m))


@dataclass(frozen=True)
class SymplecticMatrix:
    """Integer matrix preserving the intersection form; acts on column vectors."""

    surface: Surface
    rows: Rows
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = self.surface.rank
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected a {n}x{n} matrix")
        object.__setattr__(self, "rows", rows)
        if self.check and not _is_symplectic_rows(rows):
            raise ValueError("matrix does not preserve the intersection form")

    def __matmul__(self, other):
        if isinstance(other, SymplecticMatrix):
            _check_same(self.surface, other.surface)
            return SymplecticMatrix(self.surface, _matmul(self.rows, other.rows), check=False)
        if isinstance(other, HomologyClass):
            _check_same(self.surface, other.surface)
            return HomologyClass(
                self.surface,
                tuple(sum(m * x for m, x in zip(row, other.coords)) for row in self.rows),
            )
        return NotImplemented

    def inverse(self) -> SymplecticMatrix:
        # M^{-1} = -J M^T J, i.e. inv[i][j] = s_i s_j M[p(j)][p(i)] where p
        # swaps a_k <-> b_k and s is +1 on a's, -1 on b's.
        n = self.surface.rank
        partner = [i + 1 if i % 2 == 0 else i - 1 for i in range(n)]
        sign = [1 if i % 2 == 0 else -1 for i in range(n)]
        inv = tuple(
            tuple(sign[i] * sign[j] * self.rows[partner[j]][partner[i]] for j in range(n))
            for i in range(n)
        )
        return SymplecticMatrix(self.surface, inv, check=False)

    def __pow__(self, k: int) -> SymplecticMatrix:
        base = self if k >= 0 else self.inverse()
        result = self.surface.identity()
        for _ in range(abs(k)):
            result = base @ result
        return result

    def is_identity(self) -> bool:
        return self.rows == _identity_rows(self.surface.rank)

    def det(self) -> int:
        return determinant(self.rows)

    def __repr__(self):
        return f"SymplecticMatrix(g={self.surface.genus}, {[list(r) for r in self.rows]})"


def twist_matrix(c: HomologyClass, handedness: int = 1) -> SymplecticMatrix:
    """Matrix of ``x -> x + handedness * <x, c> * c``.

    Powers of a transvection add, so any nonzero integer works as
    ``handedness``; +1 is a right-handed twist.
    """
    v = c.coords
    n = len(v)
    # column j is the image of e_j; <e_j, c> = Jc[j]
    jc = [0] * n
    for k in range(0, n, 2):
        jc[k] = v[k + 1]
        jc[k + 1] = -v[k]
    rows = tuple(
        tuple(int(i == j) + handedness * v[i] * jc[j] for j in range(n)) for i in range(n)
    )
    return SymplecticMatrix(c.surface, rows, check=False)


@dataclass(frozen=True)
class Letter:
    """One twist ``t_curve^exponent`` in a word.

    ``name`` is an optional atlas label (``B0``, ``a``...) kept for
    serialization.
    """

    curve: HomologyClass
    exponent: int = 1
    separating: bool = False
    name: str | None = None

    def __post_init__(self):
        if not isinstance(self.exponent, int) or self.exponent == 0:
            raise ValueError("twist exponent must be a nonzero integer")
        if self.separating and not self.curve.is_zero():
            raise ValueError("a separating curve is null-homologous; its class must be 0")


@dataclass(frozen=True)
class TwistWord:
    surface: Surface
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            _check_same(self.surface, letter.curve.surface)
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: TwistWord) -> TwistWord:
        _check_same(self.surface, other.surface)
        return TwistWord(self.surface, self.letters + other.letters)

    def __mul__(self, k: int) -> TwistWord:
        return TwistWord(self.surface, self.letters * k)

    @property
    def separating_count(self) -> int:
        return sum(1 for letter in self.letters if letter.separating)


def _apply_transvection(cols: list[list[int]], v: Sequence[int], e: int) -> None:
    """In place: replace each column x by x + e <x, v> v."""
    if not any(v):
        return
    for x in cols:
        p = _pair(x, v)
        if p:
            p *= e
            for k, vk in enumerate(v):
                if vk:
                    x[k] += p * vk


def word_matrix(w: TwistWord) -> SymplecticMatrix:
    """Homology action of the whole word, leftmost letter applied first."""
    n = w.surface.rank
    cols = [[int(i == j) for i in range(n)] for j in range(n)]
    for letter in w.letters:
        _apply_transvection(cols, letter.curve.coords, letter.exponent)
    rows = tuple(zip(*cols))
    return SymplecticMatrix(w.surface, rows, check=False)


def conjugate_word(w: TwistWord, f: SymplecticMatrix) -> TwistWord:
    """Replace each ``t_c`` by ``f t_c f^{-1} = t_{f(c)}``.

    Atlas names survive only when ``f`` is the identity, since ``f(c)`` is
    generally a different curve.
    """
    _check_same(w.surface, f.surface)
    if f.is_identity():
        return w
    return TwistWord(
        w.surface,
        tuple(Letter(f @ letter.curve, letter.exponent, letter.separating) for letter in w.letters),
    )

"""Lefschetz fibrations described by their vanishing cycles, and their invariants.

Only homological data is modelled.  A fibration over the sphere must have
total monodromy acting trivially on ``H_1`` of the fiber; that is necessary,
not sufficient, for the factorization to close up in the mapping class group.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .atlas import korkmaz_word, twisted_relator
from .homology import (
    HomologyClass,
    Letter,
    Surface,
    SymplecticMatrix,
    TwistWord,
    _pair,
    is_symplectic,
    twist_matrix,
    word_matrix,
)
from .linalg import AbelianGroup, IntegerMatrix, cokernel, form_signature, nullspace

# Global sign in front of the Meyer sum.  Together with right-handed twists
# acting by x -> x + <x, c> c this gives signature -8 for W_3.
MEYER_SIGN = 1
# Local signature of a singular fiber whose vanishing cycle separates.
SEPARATING_LOCAL_SIGNATURE = -1

BASES = ("disk", "sphere")

RELATOR_CAVEAT = (
    "identity on H_1 is necessary but not sufficient for the word to be "
    "trivial in the mapping class group"
)


class PreconditionError(ValueError):
    """An invariant was requested for input that violates its hypotheses."""


class VanishingCycle(NamedTuple):
    curve: HomologyClass
    separating: bool = False


@dataclass(frozen=True)
class Fibration:
    fiber_genus: int
    base: str
    cycles: tuple[VanishingCycle, ...] = ()
    fiber_boundary_components: int = 0
    section_square: int | None = None

    def __post_init__(self):
        if self.base not in BASES:
            raise ValueError(f"base must be one of {BASES}, got {self.base!r}")
        if self.fiber_boundary_components not in (0, 1):
            raise ValueError("fiber may have 0 or 1 boundary components")
        surface = Surface(self.fiber_genus)
        cycles = []
        for c in self.cycles:
            c = VanishingCycle(*c)
            if c.curve.is_zero() and not c.separating:
                warnings.warn("zero-class vanishing cycle treated as separating", stacklevel=3)
                c = VanishingCycle(c.curve, True)
            cycles.append(c)
        cycles = tuple(cycles)
        for c in cycles:
            if c.curve.surface != surface:
                raise ValueError(
                    f"cycle on genus {c.curve.surface.genus} in a genus {self.fiber_genus} fibration"
                )
            if c.separating and not c.curve.is_zero():
                raise ValueError("separating vanishing cycles must have class 0")
        object.__setattr__(self, "cycles", cycles)
        if self.base == "sphere":
            if self.fiber_boundary_components:
                raise PreconditionError("a fibration over the sphere has closed fibers")
            if not self.monodromy().is_identity():
                raise PreconditionError(
                    "total monodromy is not the identity on H_1, so the fibration "
                    "does not close up over the sphere"
                )

    @property
    def surface(self) -> Surface:
        return Surface(self.fiber_genus)

    def word(self) -> TwistWord:
        return TwistWord(self.surface, tuple(Letter(c.curve, 1, c.separating) for c in self.cycles))

    def monodromy(self) -> SymplecticMatrix:
        return word_matrix(self.word())

    @property
    def separating_count(self) -> int:
        return sum(1 for c in self.cycles if c.separating)

    def __len__(self):
        return len(self.cycles)


def fibration_from_word(
    w: TwistWord,
    base: str = "sphere",
    fiber_boundary_components: int = 0,
    section_square: int | None = None,
) -> Fibration:
    """Expand a positive word into one vanishing cycle per singular fiber."""
    cycles = []
    for letter in w.letters:
        if letter.exponent < 0:
            raise PreconditionError(
                "left-handed twists do not come from Lefschetz singular fibers"
            )
        cycles += [VanishingCycle(letter.curve, letter.separating)] * letter.exponent
    return Fibration(w.surface.genus, base, tuple(cycles), fiber_boundary_components, section_square)


def korkmaz_fibration(g: int) -> Fibration:
    """``X_g``: the relator is the boundary twist in the one-holed surface, so the section has square -1."""
    return fibration_from_word(korkmaz_word(g), "sphere", section_square=-1)


def twisted_fibration(g: int, n: int) -> Fibration:
    """``X_g(n)``, the self fiber sum of ``X_g`` twisted by ``t_{a_1}^n``."""
    x = korkmaz_fibration(g)
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"twist power must be a nonnegative integer, got {n!r}")
    return fiber_sum(x, x, twist_matrix(x.surface.a(1), n))


def filling_fibration(g: int, n: int) -> Fibration:
    """``S_g(n)``: ``X_g(n)`` minus a regular fiber and the section, fibered over the disk."""
    x = twisted_fibration(g, n)
    return Fibration(g, "disk", x.cycles, fiber_boundary_components=1)


def fiber_sum(f1: Fibration, f2: Fibration, f: SymplecticMatrix) -> Fibration:
    if f1.fiber_genus != f2.fiber_genus:
        raise ValueError(f"fiber genus {f1.fiber_genus} vs {f2.fiber_genus}")
    if f1.base != "sphere" or f2.base != "sphere":
        raise PreconditionError("fiber sums are taken of fibrations over the sphere")
    if f.surface != f1.surface:
        raise ValueError("gluing map lives on a different surface")
    cycles = f1.cycles + tuple(VanishingCycle(f @ c.curve, c.separating) for c in f2.cycles)
    square = None
    if f1.section_square is not None and f2.section_square is not None:
        square = f1.section_square + f2.section_square
    return Fibration(f1.fiber_genus, "sphere", cycles, 0, square)


def h1(fib: Fibration) -> AbelianGroup:
    """First homology of the total space: ``H_1(fiber)`` modulo the vanishing cycles.

    Over the sphere this needs a section (otherwise the fiber class can
    survive), so fibrations without ``section_square`` are refused.
    """
    if fib.base == "sphere" and fib.section_square is None:
        raise PreconditionError(
            "H_1 over the sphere is the quotient by vanishing cycles only when the "
            "fibration has a section; no section is recorded for this fibration"
        )
    n = fib.surface.rank
    cols = [c.curve.coords for c in fib.cycles]
    return cokernel(IntegerMatrix.from_columns(cols, n))


def euler_characteristic(fib: Fibration) -> int:
    """``chi(base) * chi(fiber) + #singular fibers``."""
    chi_base = 1 if fib.base == "disk" else 2
    chi_fiber = 2 - 2 * fib.fiber_genus - fib.fiber_boundary_components
    return chi_base * chi_fiber + len(fib.cycles)


def _meyer(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> int:
    n = len(a)
    # symplectic inverse: -J A^T J
    partner = [i + 1 if i % 2 == 0 else i - 1 for i in range(n)]
    sign = [1 if i % 2 == 0 else -1 for i in range(n)]
    a_inv = [[sign[i] * sign[j] * a[partner[j]][partner[i]] for j in range(n)] for i in range(n)]
    constraint = [
        [a_inv[i][j] - (i == j) for j in range(n)] + [b[i][j] - (i == j) for j in range(n)]
        for i in range(n)
    ]
    basis = nullspace(constraint, 2 * n)
    if not basis:
        return 0
    sums, images = [], []
    for v in basis:
        x, y = v[:n], v[n:]
        sums.append([xi + yi for xi, yi in zip(x, y)])
        # (I - B) y
        images.append([y[i] - sum(b[i][j] * y[j] for j in range(n)) for i in range(n)])
    k = len(basis)
    form = [[_pair(sums[i], images[j]) for j in range(k)] for i in range(k)]
    half = Fraction(1, 2)
    sym = [[half * (form[i][j] + form[j][i]) for j in range(k)] for i in range(k)]
    return form_signature(sym)


def meyer_cocycle(a: SymplecticMatrix, b: SymplecticMatrix) -> int:
    """Meyer's signature cocycle ``tau(A, B)``.

    Signature of the symmetrized form ``(x1 + y1)^T J (I - B) y2`` on
    ``{(x, y) : (A^{-1} - I) x + (B - I) y = 0}``.
    """
    if a.surface != b.surface:
        raise ValueError("matrices act on different surfaces")
    if not (is_symplectic(a.rows) and is_symplectic(b.rows)):
        raise ValueError("Meyer's cocycle is defined on symplectic matrices only")
    return _meyer(a.rows, b.rows)


def signature(fib: Fibration) -> int:
    """Signature of the total space from the Meyer cocycle and local terms.

    Sums ``tau(M_k, T_{k+1})`` where ``M_k`` is the monodromy of the first
    ``k`` cycles, then adds -1 for each separating cycle.  Only defined when
    the total monodromy is trivial on homology.
    """
    if not fib.monodromy().is_identity():
        raise PreconditionError(
            "signature via the Meyer cocycle needs a factorization of the identity; "
            "this monodromy is nontrivial on H_1"
        )
    n = fib.surface.rank
    cumulative = [[int(i == j) for j in range(n)] for i in range(n)]
    at_identity = True
    total = 0
    for cycle in fib.cycles:
        if cycle.curve.is_zero():
            continue  # T = I, and tau(M, I) = 0
        t = twist_matrix(cycle.curve).rows
        if not at_identity:  # tau(I, T) = 0
            total += _meyer(cumulative, t)
        cumulative = [
            [sum(t[i][m] * cumulative[m][j] for m in range(n)) for j in range(n)]
            for i in range(n)
        ]
        at_identity = all(cumulative[i][j] == (i == j) for i in range(n) for j in range(n))
    return MEYER_SIGN * total + SEPARATING_LOCAL_SIGNATURE * fib.separating_count


@dataclass(frozen=True)
class RelatorReport:
    length: int
    matrix: SymplecticMatrix
    is_identity: bool
    separating_count: int
    caveat: str = RELATOR_CAVEAT


def verify_relator(w: TwistWord) -> RelatorReport:
    m = word_matrix(w)
    return RelatorReport(len(w), m, m.is_identity(), w.separating_count)


# -- plumbings -----------------------------------------------------------------


@dataclass(frozen=True)
class PlumbingGraph:
    """Disk bundles over surfaces, one per vertex ``(genus, euler number)``, plumbed along edges."""

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        vertices = tuple((int(g), int(e)) for g, e in self.vertices)
        if not vertices:
            raise ValueError("a plumbing needs at least one vertex")
        if any(g < 0 for g, _ in vertices):
            raise ValueError("vertex genus must be nonnegative")
        edges = []
        for i, j in self.edges:
            if not (0 <= i < len(vertices) and 0 <= j < len(vertices)):
                raise ValueError(f"edge {i}-{j} refers to a missing vertex")
            if i == j:
                raise ValueError(f"self-plumbing at vertex {i} is not supported")
            edge = (min(i, j), max(i, j))
            if edge in edges:
                raise ValueError(f"repeated edge {i}-{j}")
            edges.append(edge)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))

    def intersection_matrix(self) -> list[list[int]]:
        n = len(self.vertices)
        q = [[0] * n for _ in range(n)]
        for k, (_, e) in enumerate(self.vertices):
            q[k][k] = e
        for i, j in self.edges:
            q[i][j] += 1
            q[j][i] += 1
        return q

    def is_connected(self) -> bool:
        seen, stack = {0}, [0]
        adj = {k: set() for k in range(len(self.vertices))}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        while stack:
            for m in adj[stack.pop()] - seen:
                seen.add(m)
                stack.append(m)
        return len(seen) == len(self.vertices)


def plumbing_boundary_h1(p: PlumbingGraph) -> AbelianGroup:
    """``H_1`` of the boundary 3-manifold of a plumbing.

    The plumbing retracts onto the union of the base surfaces, whose ``H_1``
    is free of rank ``2 sum(genus) + b_1(graph)``; the boundary adds the
    cokernel of the intersection matrix.
    """
    if not p.is_connected():
        raise PreconditionError("plumbing graph is disconnected")
    loops = len(p.edges) - len(p.vertices) + 1
    free = 2 * sum(g for g, _ in p.vertices) + loops
    coker = cokernel(p.intersection_matrix())
    return AbelianGroup(coker.free_rank + free, coker.torsion)


def boundary_plumbing(g: int) -> PlumbingGraph:
    """Genus ``g`` surface with Euler number 0 plumbed once with a sphere of Euler number 2."""
    return PlumbingGraph(((g, 0), (0, 2)), ((0, 1),))


# -- the filling family ----------------------------------------------------------


@dataclass(frozen=True)
class FillingReport:
    genus: int
    twist_power: int
    length: int
    h1: AbelianGroup
    closed_h1: AbelianGroup
    chi: int
    relator_chi: int
    sigma: int
    section_square: int
    boundary_h1: AbelianGroup
    relator_ok: bool
    separating_count: int
    notes: tuple[str, ...] = field(default=())


def filling_report(g: int, n: int) -> FillingReport:
    """Invariants of the Stein filling ``S_g(n)`` and of its closed-up ``X_g(n)``."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"twist power must be a nonnegative integer, got {n!r}")
    closed = twisted_fibration(g, n)
    filling = filling_fibration(g, n)
    single = fibration_from_word(korkmaz_word(g), "disk", fiber_boundary_components=1)
    chi = euler_characteristic(filling)
    fiber_chi = 1 - 2 * g
    w = twisted_relator(g, n)
    notes = [
        f"factorization length s = chi - (1 - 2g): {len(filling)} = {chi} - ({fiber_chi})",
        f"the single relator W_{g} has {len(single)} twists and disk-base chi "
        f"{euler_characteristic(single)}; the twisted sum W_{g}({n}) has {len(filling)} "
        f"twists, so its disk-base chi is {chi}",
        f"boundary: plumbing (genus {g}, e=0)-(genus 0, e=2)",
        "homology only: " + RELATOR_CAVEAT,
    ]
    return FillingReport(
        genus=g,
        twist_power=n,
        length=len(w),
        h1=h1(filling),
        closed_h1=h1(closed),
        chi=chi,
        relator_chi=euler_characteristic(single),
        sigma=signature(filling),
        section_square=closed.section_square,
        boundary_h1=plumbing_boundary_h1(boundary_plumbing(g)),
        relator_ok=word_matrix(w).is_identity(),
        separating_count=w.separating_count,
        notes=tuple(notes),
    )

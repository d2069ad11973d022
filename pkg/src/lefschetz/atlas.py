"""Homology classes of Korkmaz's vanishing cycles and the relators built from them.

For odd ``g = 2r + 1`` the relator is ``(t_B0 t_B1 ... t_Bg t_a^2 t_b^2)^2``;
for even ``g = 2r`` it is ``(t_B0 t_B1 ... t_Bg t_c)^2`` with ``c``
separating.  The curves are only known through homology relations:

    B_0      = b_1 + ... + b_g
    B_{2i-1} = b_i + B_{2i} + b_{g-i+1}
    B_{2i}   = a_i - a_{i+1} + B_{2i+1} + a_{g-i+1} - a_{g-i}

seeded from the top curve.  For odd genus ``B_g = a + b_{r+1} + b`` with
``a = b = a_{r+1}`` (two disjoint homologous curves).  For even genus
``B_g = a_r + a_{r+1}``.  Both seeds are the ones for which the squared
product acts trivially on homology; see ``tests/test_atlas.py``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .homology import HomologyClass, Letter, Surface, TwistWord, conjugate_word, twist_matrix


@dataclass(frozen=True)
class CurveAtlas:
    surface: Surface
    classes: dict[str, HomologyClass]
    separating: frozenset[str] = frozenset()

    @property
    def genus(self) -> int:
        return self.surface.genus

    def names(self) -> list[str]:
        return list(self.classes)

    def __getitem__(self, name: str) -> HomologyClass:
        try:
            return self.classes[name]
        except KeyError:
            raise KeyError(
                f"no curve named {name!r} at genus {self.genus}; known: {', '.join(self.classes)}"
            ) from None

    def letter(self, name: str, exponent: int = 1) -> Letter:
        return Letter(self[name], exponent, name in self.separating, name)


def _check_genus(g) -> None:
    if not isinstance(g, int) or isinstance(g, bool) or g < 2:
        raise ValueError(f"Korkmaz relators need genus g >= 2, got {g!r}")


def korkmaz_curves(g: int) -> CurveAtlas:
    _check_genus(g)
    S = Surface(g)
    a, b = S.a, S.b
    B: dict[int, HomologyClass] = {}
    if g % 2:
        r = (g - 1) // 2
        extra = {"a": a(r + 1), "b": a(r + 1)}
        B[g] = extra["a"] + b(r + 1) + extra["b"]
        separating = frozenset()
    else:
        r = g // 2
        extra = {"c": S.zero()}
        B[g] = a(r) + a(r + 1)
        separating = frozenset({"c"})
    for i in range(r, 0, -1):
        if 2 * i < g:
            B[2 * i] = a(i) - a(i + 1) + B[2 * i + 1] + a(g - i + 1) - a(g - i)
        B[2 * i - 1] = b(i) + B[2 * i] + b(g - i + 1)
    B[0] = S.zero()
    for j in range(1, g + 1):
        B[0] = B[0] + b(j)

    classes = {f"B{i}": B[i] for i in range(g + 1)}
    classes.update(extra)
    return CurveAtlas(S, classes, separating)


def korkmaz_word(g: int) -> TwistWord:
    """``W_g`` with squared twists written out as repeated letters."""
    atlas = korkmaz_curves(g)
    names = [f"B{i}" for i in range(g + 1)]
    names += ["a", "a", "b", "b"] if g % 2 else ["c"]
    half = TwistWord(atlas.surface, tuple(atlas.letter(n) for n in names))
    return half * 2


def twisted_relator(g: int, n: int) -> TwistWord:
    """``W_g(n) = W_g`` followed by ``W_g`` conjugated by ``t_{a_1}^n``."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"twist power must be a nonnegative integer, got {n!r}")
    w = korkmaz_word(g)
    f = twist_matrix(w.surface.a(1), n)
    return w + conjugate_word(w, f)

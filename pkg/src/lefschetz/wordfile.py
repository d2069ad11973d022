"""Plain-text monodromy word files.

::

    # comment
    genus 3
    base disk            # or: sphere
    section -1           # optional, self-intersection of a known section
    twist B0             # a named curve from the Korkmaz atlas
    twist 1 0 1 0 1 0 1  # exponent, then 2g coordinates in (a1, b1, ..., ag, bg)
    twist 1 0 0 0 0 0 0 separating

A class of 0 must be marked ``separating`` unless the parser is told to
accept it (it is then treated as separating, with a warning).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .atlas import CurveAtlas, korkmaz_curves
from .fibration import BASES
from .homology import HomologyClass, Letter, Surface, TwistWord


class WordFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class WordFile:
    word: TwistWord
    base: str = "disk"
    section_square: int | None = None
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def genus(self) -> int:
        return self.word.surface.genus


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise WordFileError(lineno, f"expected an integer {what}, got {token!r}") from None


def parse(text: str, allow_unmarked_zero: bool = False) -> WordFile:
    genus = base = section = None
    surface: Surface | None = None
    atlas: CurveAtlas | None = None
    letters: list[Letter] = []
    warnings: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        key, args = tokens[0], tokens[1:]
        if key == "genus":
            if genus is not None:
                raise WordFileError(lineno, "genus given twice")
            if len(args) != 1:
                raise WordFileError(lineno, "usage: genus <int>")
            genus = _int(args[0], lineno, "genus")
            if genus < 1:
                raise WordFileError(lineno, "genus must be at least 1")
            surface = Surface(genus)
        elif key == "base":
            if len(args) != 1 or args[0] not in BASES:
                raise WordFileError(lineno, "usage: base disk|sphere")
            base = args[0]
        elif key == "section":
            if len(args) != 1:
                raise WordFileError(lineno, "usage: section <int>")
            section = _int(args[0], lineno, "section square")
        elif key == "twist":
            if surface is None:
                raise WordFileError(lineno, "'genus' must come before the first twist")
            if not args:
                raise WordFileError(lineno, "twist needs a curve name or an explicit class")
            if _looks_int(args[0]):
                letters.append(_explicit(args, surface, lineno, allow_unmarked_zero, warnings))
            else:
                if len(args) != 1:
                    raise WordFileError(lineno, "usage: twist <name>")
                if atlas is None:
                    if genus < 2:
                        raise WordFileError(lineno, "named curves exist only for genus >= 2")
                    atlas = korkmaz_curves(genus)
                if args[0] not in atlas.classes:
                    raise WordFileError(
                        lineno, f"unknown curve {args[0]!r}; known: {', '.join(atlas.names())}"
                    )
                letters.append(atlas.letter(args[0]))
        else:
            raise WordFileError(lineno, f"unknown keyword {key!r}")

    if surface is None:
        raise WordFileError(0, "missing 'genus' line")
    return WordFile(TwistWord(surface, tuple(letters)), base or "disk", section, tuple(warnings))


def _looks_int(token: str) -> bool:
    return token.lstrip("+-").isdigit()


def _explicit(args, surface, lineno, allow_unmarked_zero, warnings) -> Letter:
    separating = args[-1] == "separating"
    if separating:
        args = args[:-1]
    exponent = _int(args[0], lineno, "exponent")
    if exponent == 0:
        raise WordFileError(lineno, "exponent must be nonzero")
    coords = [_int(t, lineno, "coordinate") for t in args[1:]]
    if len(coords) != surface.rank:
        raise WordFileError(
            lineno, f"expected {surface.rank} coordinates for genus {surface.genus}, got {len(coords)}"
        )
    curve = HomologyClass(surface, tuple(coords))
    if separating and not curve.is_zero():
        raise WordFileError(lineno, "a separating curve must have class 0")
    if curve.is_zero() and not separating:
        if not allow_unmarked_zero:
            raise WordFileError(
                lineno, "zero class without 'separating' (mark it, or allow unmarked zero classes)"
            )
        warnings.append(f"line {lineno}: zero class treated as separating")
        separating = True
    return Letter(curve, exponent, separating)


def dumps(word: TwistWord, base: str = "disk", section_square: int | None = None) -> str:
    g = word.surface.genus
    atlas = korkmaz_curves(g) if g >= 2 else None
    lines = [f"genus {g}", f"base {base}"]
    if section_square is not None:
        lines.append(f"section {section_square}")
    for letter in word.letters:
        named = (
            letter.name is not None
            and atlas is not None
            and letter.exponent == 1
            and atlas.classes.get(letter.name) == letter.curve
            and (letter.name in atlas.separating) == letter.separating
        )
        if named:
            lines.append(f"twist {letter.name}")
        else:
            line = f"twist {letter.exponent} " + " ".join(map(str, letter.curve.coords))
            if letter.separating:
                line += " separating"
            lines.append(line)
    return "\n".join(lines) + "\n"

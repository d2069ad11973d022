"""Structured invariant reports shared by the CLI's text and JSON output."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .linalg import AbelianGroup


@dataclass(frozen=True)
class Report:
    genus: int | None
    base: str | None
    length: int | None
    h1: dict | None
    chi: int | None
    sigma: int | None
    relator_ok: bool | None
    separating_count: int | None
    section_square: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        labels = [
            ("genus", self.genus),
            ("base", self.base),
            ("length", self.length),
            ("H_1", group_text(self.h1)),
            ("chi", self.chi),
            ("sigma", self.sigma),
            ("relator on H_1", self.relator_ok),
            ("separating twists", self.separating_count),
            ("section square", self.section_square),
        ]
        out = [f"{name:<18} {value}" for name, value in labels if value is not None]
        out += [f"note: {n}" for n in self.notes]
        return "\n".join(out) + "\n"


def group_dict(g: AbelianGroup) -> dict:
    return {"rank": g.free_rank, "torsion": list(g.torsion)}


def group_text(d: dict | None) -> str | None:
    if d is None:
        return None
    return str(AbelianGroup(d["rank"], tuple(d["torsion"])))

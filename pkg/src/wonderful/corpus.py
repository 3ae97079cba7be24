"""Default cross-validation corpus: hand-picked saturated monoids plus the
color monoids of primitive spherical systems of small groups."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from .monoids import GeneratorMonoid, is_saturated, make_monoid, monoid_from_json
from .rootsystem import InputError, build_diagram
from .systems import SphericalSystem, colors, enumerate_systems, is_primitive

HAND_PICKED = (
    ("A1", [[1]]), ("A1", [[2]]), ("A1", [[3]]), ("A1", [[4]]),
    ("A1xA1", [[1, 1]]), ("A1xA1", [[1, 0], [0, 1]]), ("A1xA1", [[2, 0], [0, 1]]),
    ("A1xA1", [[2, 0], [0, 2]]), ("A1xA1", [[2, 2]]),
    ("A2", [[1, 1]]), ("A2", [[1, 0], [0, 1]]), ("A2", [[2, 0], [0, 2]]), ("A2", [[1, 0]]),
    ("A2", [[2, 0]]), ("A2", [[2, 0], [0, 1]]),
    ("B2", [[1, 0]]), ("B2", [[0, 1]]), ("B2", [[0, 2]]), ("B2", [[1, 0], [0, 2]]),
    ("B2", [[1, 0], [0, 1]]), ("B2", [[2, 0]]), ("B2", [[1, 1]]), ("B2", [[2, 0], [0, 2]]),
    ("G2", [[1, 0]]), ("G2", [[0, 1]]), ("G2", [[1, 0], [0, 1]]),
    ("A3", [[0, 1, 0]]), ("A3", [[1, 0, 1]]), ("A3", [[1, 0, 0], [0, 0, 1]]), ("A3", [[0, 2, 0]]),
    ("A3", [[1, 0, 0], [0, 1, 0]]),
    ("B3", [[1, 0, 0]]), ("B3", [[0, 0, 1]]), ("C3", [[0, 1, 0]]), ("C3", [[1, 0, 0]]),
    ("A2xA1", [[1, 1, 0], [0, 0, 1]]), ("A2xA1", [[1, 0, 1], [0, 1, 1]]),
)

PRIMITIVE_DIAGRAMS = ("A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3", "A2xA1")


@dataclass(frozen=True)
class CorpusEntry:
    monoid: GeneratorMonoid
    origin: str                      # "hand" or "colors:<system>"
    system: Optional[SphericalSystem] = None

    def to_json(self) -> dict:
        out = self.monoid.to_json()
        out["origin"] = self.origin
        return out


def color_monoid(system: SphericalSystem) -> GeneratorMonoid:
    return GeneratorMonoid(system.diagram, tuple(c.weight for c in colors(system)))


def primitive_entries(specs: Iterable[str] = PRIMITIVE_DIAGRAMS) -> List[CorpusEntry]:
    out = []
    for spec in specs:
        d = build_diagram(spec)
        for sys in enumerate_systems(d):
            if is_primitive(sys):
                label = ";".join(",".join(map(str, v)) for v in sys.vectors())
                out.append(CorpusEntry(color_monoid(sys), f"colors:{spec}[{label}]", sys))
    return out


def default_corpus() -> List[CorpusEntry]:
    """Hand-picked entries followed by new primitive color monoids, deduplicated."""
    out, seen = [], set()
    for spec, gens in HAND_PICKED:
        m = make_monoid(spec, gens)
        out.append(CorpusEntry(m, "hand"))
        seen.add((m.diagram.spec, frozenset(m.generators)))
    for e in primitive_entries():
        key = (e.monoid.diagram.spec, frozenset(e.monoid.generators))
        if key not in seen:
            seen.add(key)
            out.append(e)
    return out


def load_corpus(path) -> List[CorpusEntry]:
    """Read a JSON list of monoids ({"diagram", "generators"})."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read corpus {path}: {exc}") from exc
    if not isinstance(data, list):
        raise InputError("corpus must be a JSON list of monoids")
    return [CorpusEntry(monoid_from_json(obj), obj.get("origin", "file") if isinstance(obj, dict) else "file")
            for obj in data]

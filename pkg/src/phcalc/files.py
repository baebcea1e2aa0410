"""On-disk formats: facet lists, filtration documents, barcode documents.

Complexes travel as plain text (one facet per line); filtrations and
barcodes travel as JSON.  Parsing reports a location with every error,
and each serializer round-trips with its parser on canonical inputs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .complexes import Simplex
from .filtration import Filtration
from .persistence import Barcode, PersistencePair


class ParseError(ValueError):
    """Malformed input, with a human-readable location."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def parse_facets(text: str) -> tuple[Simplex, ...]:
    """Parse a facet list: one facet per line, vertices space-separated.

    `#` starts a comment; blank lines are skipped.  An empty result is
    legal and denotes the empty complex.
    """
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            vertices = [int(f) for f in fields]
        except ValueError:
            raise ParseError(
                f"line {lineno}", f"vertices must be integers, got {line!r}"
            ) from None
        try:
            facets.append(Simplex(tuple(vertices)))
        except ValueError as exc:
            raise ParseError(f"line {lineno}", str(exc)) from None
    return tuple(facets)


def serialize_facets(facets: tuple[Simplex, ...] | list[Simplex]) -> str:
    return "".join(" ".join(str(v) for v in f) + "\n" for f in facets)


def _facet_at(obj: object, where: str) -> Simplex:
    if not isinstance(obj, list) or not obj:
        raise ParseError(where, "each facet must be a non-empty list of vertices")
    for k, v in enumerate(obj):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(f"{where}[{k}]", f"vertex must be an integer, got {v!r}")
    try:
        return Simplex(tuple(obj))
    except ValueError as exc:
        raise ParseError(where, str(exc)) from None


@dataclass(frozen=True)
class FiltrationDocument:
    """A filtration as written to disk: cumulative facet lists per level."""

    levels: tuple[tuple[Simplex, ...], ...]
    name: str | None = None

    def to_filtration(self) -> Filtration:
        return Filtration.from_level_facets(self.levels)

    def serialize(self) -> str:
        doc: dict[str, object] = {}
        if self.name is not None:
            doc["name"] = self.name
        doc["levels"] = [
            [list(f.vertices) for f in level] for level in self.levels
        ]
        return json.dumps(doc, indent=2) + "\n"


def parse_filtration(text: str, incremental: bool = False) -> FiltrationDocument:
    """Parse a filtration document and validate it eagerly.

    With incremental=True each level lists only the facets new at that
    level; they are accumulated into cumulative lists, so nesting holds
    by construction.  In the default cumulative mode a non-nested file
    fails validation (FiltrationError from the filtration itself).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(doc, dict):
        raise ParseError("document", "top level must be an object")
    unknown = set(doc) - {"name", "levels"}
    if unknown:
        raise ParseError("document", f"unknown fields {sorted(unknown)}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name", f"must be a string, got {name!r}")
    raw_levels = doc.get("levels")
    if not isinstance(raw_levels, list) or not raw_levels:
        raise ParseError("levels", "must be a non-empty list of levels")

    levels: list[tuple[Simplex, ...]] = []
    running: list[Simplex] = []
    for j, raw_level in enumerate(raw_levels):
        if not isinstance(raw_level, list):
            raise ParseError(f"levels[{j}]", "each level must be a list of facets")
        parsed = [
            _facet_at(raw, f"levels[{j}][{k}]") for k, raw in enumerate(raw_level)
        ]
        if incremental:
            running.extend(parsed)
            levels.append(tuple(running))
        else:
            levels.append(tuple(parsed))
    document = FiltrationDocument(tuple(levels), name)
    document.to_filtration()  # fail now, not at first use
    return document


def _pair_to_dict(pair: PersistencePair) -> dict[str, object]:
    death = None if pair.is_infinite else pair.death
    return {"birth": pair.birth, "death": death, "multiplicity": pair.multiplicity}


def serialize_barcodes(barcodes: list[Barcode] | tuple[Barcode, ...]) -> str:
    doc = {
        "barcodes": [
            {
                "dimension": b.dimension,
                "intervals": [_pair_to_dict(p) for p in b.pairs],
            }
            for b in barcodes
        ]
    }
    return json.dumps(doc, indent=2) + "\n"


def _pair_at(obj: object, where: str) -> PersistencePair:
    if not isinstance(obj, dict):
        raise ParseError(where, "each interval must be an object")
    unknown = set(obj) - {"birth", "death", "multiplicity"}
    if unknown:
        raise ParseError(where, f"unknown fields {sorted(unknown)}")
    birth = obj.get("birth")
    death = obj.get("death")
    count = obj.get("multiplicity")
    if isinstance(birth, bool) or not isinstance(birth, int):
        raise ParseError(where, f"birth must be an integer, got {birth!r}")
    if death is not None and (isinstance(death, bool) or not isinstance(death, int)):
        raise ParseError(where, f"death must be an integer or null, got {death!r}")
    if isinstance(count, bool) or not isinstance(count, int):
        raise ParseError(where, f"multiplicity must be an integer, got {count!r}")
    try:
        return PersistencePair(birth, math.inf if death is None else death, count)
    except ValueError as exc:
        raise ParseError(where, str(exc)) from None


def parse_barcodes(text: str) -> tuple[Barcode, ...]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(doc, dict) or set(doc) != {"barcodes"}:
        raise ParseError("document", "top level must be an object with 'barcodes'")
    raw_barcodes = doc["barcodes"]
    if not isinstance(raw_barcodes, list):
        raise ParseError("barcodes", "must be a list")
    out = []
    for i, raw in enumerate(raw_barcodes):
        where = f"barcodes[{i}]"
        if not isinstance(raw, dict) or set(raw) != {"dimension", "intervals"}:
            raise ParseError(where, "must have exactly 'dimension' and 'intervals'")
        dim = raw["dimension"]
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
            raise ParseError(f"{where}.dimension", f"must be a count, got {dim!r}")
        intervals = raw["intervals"]
        if not isinstance(intervals, list):
            raise ParseError(f"{where}.intervals", "must be a list")
        pairs = tuple(
            _pair_at(p, f"{where}.intervals[{k}]") for k, p in enumerate(intervals)
        )
        out.append(Barcode(dim, pairs))
    return tuple(out)

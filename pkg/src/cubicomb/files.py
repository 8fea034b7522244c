"""Reading and writing complexes as versioned JSON documents.

The document stores the maximal cells only (cubical corner arrays in bit
order, simplicial facet vertex lists) plus optional topology metadata.
Serialization is deterministic down to the byte: cells are written in the
builder's sorted order with a fixed key order and fixed indentation.

Schema problems raise :class:`ParseError` with a position; documents that
are well-formed but fail complex validation or contradict their topology
tag raise :class:`ValidationFailed`.
"""

from __future__ import annotations

import json
from typing import Any

from .complexes import (
    ComplexError,
    CubicalCell,
    CubicalComplex,
    SimplicialComplex,
    ValidationFailed,
)
from .generators import GeneratedComplex, check_topology_metadata

__all__ = ["FORMAT_VERSION", "ParseError", "to_document", "serializes", "serialize", "parses", "parse"]

FORMAT_VERSION = "1"


class ParseError(ValueError):
    """A document that does not match the schema, with a best-effort position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, where: str | None = None):
        self.line = line
        self.column = column
        self.where = where
        prefix = ""
        if line is not None:
            prefix = f"line {line}, column {column}: " if column is not None else f"line {line}: "
        elif where:
            prefix = f"{where}: "
        super().__init__(prefix + message)


def _as_generated(x) -> GeneratedComplex:
    if isinstance(x, GeneratedComplex):
        return x
    return GeneratedComplex(x, "none", "")


def to_document(x) -> dict:
    """Plain-data form of a complex with its metadata."""
    gc = _as_generated(x)
    C = gc.complex
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "kind": C.kind,
        "dim": C.dim,
    }
    if gc.topology != "none":
        doc["topology"] = gc.topology
    if gc.polytopal:
        doc["polytopal"] = True
    if gc.provenance:
        doc["provenance"] = gc.provenance
    if C.kind == "cubical":
        doc["cells"] = [list(cell.corners) for cell in C.cells]
    else:
        doc["cells"] = [sorted(cell) for cell in C.cells]
    return doc


def serializes(x) -> str:
    return json.dumps(to_document(x), indent=2) + "\n"


def serialize(x, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serializes(x))


def _need(doc: dict, field: str, types, where: str = "") -> Any:
    if field not in doc:
        raise ParseError(f"missing field {field!r}", where=where or None)
    value = doc[field]
    if isinstance(value, bool) or not isinstance(value, types):
        raise ParseError(
            f"field {field!r} has the wrong type, got {type(value).__name__}",
            where=where or None,
        )
    return value


_KNOWN_FIELDS = {"format_version", "kind", "dim", "cells", "topology", "polytopal", "provenance"}


def _check_vertices(cell: list, where: str) -> None:
    for v in cell:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ParseError(f"vertex ids must be nonnegative integers, got {v!r}", where=where)
    if len(set(cell)) != len(cell):
        raise ParseError("cell repeats a vertex", where=where)


def parses(text: str) -> GeneratedComplex:
    """Parse a document string into a validated complex with metadata."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from None
    if not isinstance(doc, dict):
        raise ParseError(f"expected a JSON object, got {type(doc).__name__}")
    unknown = sorted(set(doc) - _KNOWN_FIELDS)
    if unknown:
        raise ParseError(f"unknown field {unknown[0]!r}")
    version = _need(doc, "format_version", str)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}, expected {FORMAT_VERSION!r}")
    kind = _need(doc, "kind", str)
    if kind not in ("cubical", "simplicial"):
        raise ParseError(f"kind must be 'cubical' or 'simplicial', got {kind!r}")
    dim = _need(doc, "dim", int)
    raw_cells = _need(doc, "cells", list)
    topology = "none"
    if "topology" in doc:
        topology = _need(doc, "topology", str)
    polytopal = False
    if "polytopal" in doc:
        polytopal = doc["polytopal"]
        if not isinstance(polytopal, bool):
            raise ParseError("field 'polytopal' must be a boolean")
    provenance = ""
    if "provenance" in doc:
        provenance = _need(doc, "provenance", str)

    cells = []
    for idx, raw in enumerate(raw_cells):
        where = f"cells[{idx}]"
        if not isinstance(raw, list) or not raw:
            raise ParseError("each cell is a nonempty list of vertex ids", where=where)
        _check_vertices(raw, where)
        if kind == "cubical":
            n = len(raw)
            if n & (n - 1):
                raise ParseError(
                    f"a cubical cell needs a power-of-two corner count, got {n}", where=where
                )
            cells.append(CubicalCell(n.bit_length() - 1, tuple(raw)))
        else:
            cells.append(raw)

    try:
        if kind == "cubical":
            C = CubicalComplex.from_cells(cells) if cells else CubicalComplex.empty()
        else:
            C = SimplicialComplex.from_facets(cells) if cells else SimplicialComplex.empty()
    except ValidationFailed:
        raise
    except ComplexError as e:
        raise ValidationFailed(f"cells do not form a complex: {e}") from e
    if C.dim != dim:
        raise ValidationFailed(f"declared dim {dim} but the cells span dim {C.dim}")
    gc = GeneratedComplex(C, topology, provenance, polytopal)
    check_topology_metadata(gc)
    return gc


def parse(path) -> GeneratedComplex:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parses(text)

"""JSON serialization of complexes, matchings and block maps.

Ring elements are always written as strings so that big integers survive any
JSON toolchain.  :func:`write_complex` produces the canonical form: keys in
a fixed order, cells sorted by ``(degree, id)``, components sorted by
``(src, tgt)``, two-space indentation and a trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import BasedComplex, BlockMap, Cell, build_complex
from .errors import FormatError, InputError
from .matrix import Matrix
from .morsegraph import Matching
from .ring import RingSpec

COMPLEX_FORMAT = "amt-complex/1"
MATCHING_FORMAT = "amt-matching/1"


def _load(source) -> dict:
    if isinstance(source, dict):
        return source
    if isinstance(source, Path):
        source = source.read_text(encoding="utf-8")
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top-level JSON value must be an object")
    return doc


def _require(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise FormatError(f"{where}: missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise FormatError(f"{where}: {key!r} has the wrong type")
    return value


def _matrix(ring: RingSpec, rows, where: str) -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) and r for r in rows):
        raise FormatError(f"{where}: matrix must be a nonempty array of nonempty rows")
    if any(len(r) != len(rows[0]) for r in rows):
        raise FormatError(f"{where}: ragged matrix")
    if not all(isinstance(x, str) for r in rows for x in r):
        raise FormatError(f"{where}: matrix entries must be strings")
    try:
        return Matrix.from_rows(ring, rows)
    except InputError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def complex_from_json(doc: dict) -> BasedComplex:
    if doc.get("format") != COMPLEX_FORMAT:
        raise FormatError(f"expected format {COMPLEX_FORMAT!r}, got {doc.get('format')!r}")
    try:
        ring = RingSpec.parse(_require(doc, "ring", str, "complex"))
    except InputError as exc:
        raise FormatError(str(exc)) from exc
    cells = []
    for k, item in enumerate(_require(doc, "cells", list, "complex")):
        where = f"cells[{k}]"
        if not isinstance(item, dict):
            raise FormatError(f"{where}: must be an object")
        cid = _require(item, "id", str, where)
        degree = _require(item, "degree", int, where)
        rank = _require(item, "rank", int, where)
        if rank < 1:
            raise FormatError(f"{where}: rank must be positive")
        if not cid:
            raise FormatError(f"{where}: empty id")
        cells.append(Cell(cid, degree, rank))
    ranks = {c.id: c.rank for c in cells}

    components = []
    for k, item in enumerate(_require(doc, "differential", list, "complex")):
        if not isinstance(item, dict):
            raise FormatError(f"differential[{k}]: must be an object")
        src = _require(item, "src", str, f"differential[{k}]")
        tgt = _require(item, "tgt", str, f"differential[{k}]")
        where = f"component {src} -> {tgt}"
        m = _matrix(ring, item.get("matrix"), where)
        if src in ranks and tgt in ranks and m.shape != (ranks[tgt], ranks[src]):
            raise FormatError(
                f"{where}: matrix is {m.rows}x{m.cols}, expected {ranks[tgt]}x{ranks[src]}"
            )
        components.append((src, tgt, m))
    return build_complex(ring, cells, components)


def parse_complex(source) -> BasedComplex:
    """Parse a complex from JSON text, a decoded document or a :class:`Path`."""
    return complex_from_json(_load(source))


def load_complex(path) -> BasedComplex:
    return parse_complex(Path(path))


def _matrix_json(ring: RingSpec, m: Matrix) -> list[list[str]]:
    return [[ring.format_element(x) for x in row] for row in m.as_rows()]


def complex_to_json(c: BasedComplex) -> dict:
    ring = c.ring
    return {
        "format": COMPLEX_FORMAT,
        "ring": str(ring),
        "cells": [{"id": x.id, "degree": x.degree, "rank": x.rank} for x in c.cells],
        "differential": [
            {"src": a, "tgt": b, "matrix": _matrix_json(ring, m)}
            for (a, b), m in sorted(c.components.items())
        ],
    }


def write_complex(c: BasedComplex) -> str:
    return json.dumps(complex_to_json(c), indent=2) + "\n"


def matching_from_json(doc: dict) -> Matching:
    if doc.get("format") != MATCHING_FORMAT:
        raise FormatError(f"expected format {MATCHING_FORMAT!r}, got {doc.get('format')!r}")
    edges = _require(doc, "edges", list, "matching")
    out = []
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e)):
            raise FormatError(f"edges[{k}]: expected a pair of cell ids")
        out.append(tuple(e))
    if len(set(out)) != len(out):
        raise FormatError("matching lists an edge twice")
    return Matching(out)


def parse_matching(source) -> Matching:
    return matching_from_json(_load(source))


def load_matching(path) -> Matching:
    return parse_matching(Path(path))


def write_matching(m: Matching) -> str:
    doc = {"format": MATCHING_FORMAT, "edges": [list(e) for e in m]}
    return json.dumps(doc, indent=2) + "\n"


def block_map_to_json(m: BlockMap) -> dict:
    return {
        "shift": m.shift,
        "components": [
            {"src": a, "tgt": b, "matrix": _matrix_json(m.ring, block)}
            for (a, b), block in sorted(m.components.items())
        ],
    }


def block_map_from_json(doc: dict, ring: RingSpec, source, target) -> BlockMap:
    shift = _require(doc, "shift", int, "block map")
    comps = {}
    for k, item in enumerate(_require(doc, "components", list, "block map")):
        src = _require(item, "src", str, f"components[{k}]")
        tgt = _require(item, "tgt", str, f"components[{k}]")
        comps[src, tgt] = _matrix(ring, item.get("matrix"), f"component {src} -> {tgt}")
    return BlockMap(ring, shift, dict(source), dict(target), comps)


def write_maps(f: BlockMap, g: BlockMap, h: BlockMap) -> str:
    doc = {"f": block_map_to_json(f), "g": block_map_to_json(g), "h": block_map_to_json(h)}
    return json.dumps(doc, indent=2) + "\n"

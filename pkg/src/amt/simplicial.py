"""Simplicial chain complexes from facet lists."""

from __future__ import annotations

from itertools import combinations

from .complex import BasedComplex, Cell, build_complex
from .errors import FormatError
from .matrix import Matrix
from .ring import ZZ, RingSpec


def parse_facets(text: str) -> list[tuple[int, ...]]:
    """One facet per line, vertices separated by single spaces; ``#`` starts a comment line."""
    facets = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split(" ")
        if not all(p.isdigit() for p in parts):
            raise FormatError(f"line {lineno}: expected nonnegative integers separated by single spaces")
        verts = tuple(int(p) for p in parts)
        if len(set(verts)) != len(verts):
            raise FormatError(f"line {lineno}: repeated vertex in facet")
        facets.append(verts)
    return facets


def simplex_id(face) -> str:
    return "s" + "_".join(str(v) for v in face)


def from_simplicial(facets, ring: RingSpec = ZZ) -> BasedComplex:
    """Simplicial chain complex of the closure of ``facets``, one rank-1 cell per face."""
    faces = set()
    for facet in facets:
        verts = tuple(sorted(facet))
        if len(set(verts)) != len(verts):
            raise FormatError(f"repeated vertex in facet {facet}")
        for k in range(1, len(verts) + 1):
            faces.update(combinations(verts, k))

    cells = [Cell(simplex_id(f), len(f) - 1) for f in faces]
    components = []
    for face in faces:
        if len(face) < 2:
            continue
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            components.append((simplex_id(face), simplex_id(sub), Matrix.scalar(ring, (-1) ** i)))
    return build_complex(ring, cells, components)

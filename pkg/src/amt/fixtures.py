"""Bundled example complexes."""

from __future__ import annotations

from importlib import resources

from .complex import BasedComplex, build_complex
from .io import parse_complex
from .matrix import Matrix
from .ring import ZZ, RingSpec
from .simplicial import from_simplicial, parse_facets

SIMPLICIAL = ("circle", "sphere", "rp2", "torus", "simplex2")
NAMES = ("interval",) + SIMPLICIAL


def fixture_text(filename: str) -> str:
    return resources.files("amt").joinpath("data", filename).read_text(encoding="utf-8")


def load_fixture(name: str, ring: RingSpec = ZZ) -> BasedComplex:
    """``interval`` or one of the simplicial fixtures, over ``ring``."""
    if name == "interval":
        base = parse_complex(fixture_text("interval.json"))
        comps = [(a, b, Matrix.from_rows(ring, m.as_rows())) for (a, b), m in base.components.items()]
        return build_complex(ring, base.cells, comps)
    if name not in SIMPLICIAL:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return from_simplicial(parse_facets(fixture_text(f"{name}.txt")), ring)

"""The digraph of a based complex, Morse graphs and Morse matching validation."""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from . import matrix as mx
from .complex import BasedComplex
from .errors import CycleError, InvalidMatchingError, NotInvertibleError
from .matrix import Matrix

PLAIN = "plain"
MATCHED = "reversed-matched"


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[str, ...]
    edges: dict[tuple[str, str], str] = field(default_factory=dict)

    @cached_property
    def successors(self) -> dict[str, list[str]]:
        succ = {v: [] for v in self.vertices}
        for a, b in sorted(self.edges):
            succ[a].append(b)
        return succ

    def labeled_edges(self) -> list[tuple[str, str, str]]:
        """Edges ordered by the position of their endpoints in ``vertices``."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        return sorted(
            ((a, b, lab) for (a, b), lab in self.edges.items()),
            key=lambda e: (pos[e[0]], pos[e[1]]),
        )


@dataclass(frozen=True)
class Matching:
    """A set of digraph edges ``(alpha, beta)`` with ``deg beta = deg alpha - 1``."""

    edges: frozenset = frozenset()

    def __init__(self, edges: Iterable[tuple[str, str]] = ()):
        object.__setattr__(self, "edges", frozenset((a, b) for a, b in edges))

    def __iter__(self):
        return iter(sorted(self.edges))

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(edge) in self.edges

    def matched_cells(self) -> set[str]:
        return {v for e in self.edges for v in e}

    def partner(self) -> dict[str, str]:
        out = {}
        for a, b in self.edges:
            out[a] = b
            out[b] = a
        return out


# -- matching violations --------------------------------------------------

@dataclass(frozen=True)
class SharedVertex:
    vertex: str

    def __str__(self):
        return f"SharedVertex({self.vertex})"


@dataclass(frozen=True)
class NotAnEdge:
    source: str
    target: str

    def __str__(self):
        return f"NotAnEdge({self.source}, {self.target})"


@dataclass(frozen=True)
class NonSquare:
    source: str
    target: str

    def __str__(self):
        return f"NonSquare({self.source}, {self.target})"


@dataclass(frozen=True)
class NotInvertible:
    source: str
    target: str

    def __str__(self):
        return f"NotInvertible({self.source}, {self.target})"


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[str, ...]

    def __str__(self):
        return "Cycle(" + " -> ".join(self.vertices + self.vertices[:1]) + ")"


@dataclass
class MatchingValidation:
    errors: list
    inverses: dict[tuple[str, str], Matrix]

    @property
    def ok(self) -> bool:
        return not self.errors


def build_digraph(c: BasedComplex) -> Digraph:
    return Digraph(tuple(c.ids()), {k: PLAIN for k in c.components})


def _morse_edges(c: BasedComplex, edges: Iterable[tuple[str, str]]) -> dict:
    out = {k: PLAIN for k in c.components}
    for a, b in edges:
        del out[a, b]
    for a, b in edges:
        out[b, a] = MATCHED
    return out


def build_morse_graph(c: BasedComplex, m: Matching) -> Digraph:
    missing = [NotAnEdge(a, b) for a, b in m if (a, b) not in c.components]
    if missing:
        raise InvalidMatchingError(missing)
    return Digraph(tuple(c.ids()), _morse_edges(c, m))


def find_cycle(g: Digraph) -> list[str] | None:
    """Return the vertices of some directed cycle, or ``None`` if ``g`` is acyclic."""
    white, grey, black = 0, 1, 2
    color = dict.fromkeys(g.vertices, white)
    succ = g.successors
    for root in g.vertices:
        if color[root] != white:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        color[root] = grey
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == grey:
                    return path[path.index(w):]
                if color[w] == white:
                    color[w] = grey
                    stack.append((w, iter(succ[w])))
                    path.append(w)
                    break
            else:
                color[v] = black
                stack.pop()
                path.pop()
    return None


def topological_order(g: Digraph) -> list[str]:
    """Kahn's algorithm; among available vertices the smallest id goes first."""
    indeg = Counter(b for _, b in g.edges)
    ready = [v for v in g.vertices if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    succ = g.successors
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != len(g.vertices):
        raise CycleError(find_cycle(g))
    return order


def longest_path_length(g: Digraph) -> int:
    """Number of edges on a longest directed path of an acyclic graph."""
    depth = dict.fromkeys(g.vertices, 0)
    succ = g.successors
    for v in topological_order(g):
        for w in succ[v]:
            depth[w] = max(depth[w], depth[v] + 1)
    return max(depth.values(), default=0)


def validate_matching(c: BasedComplex, m: Matching) -> MatchingValidation:
    """Check every Morse matching condition and report all violations.

    On success ``inverses[(alpha, beta)]`` holds ``d_{beta,alpha}^{-1}``.
    """
    errors = []
    counts = Counter(v for e in m.edges for v in e)
    errors += [SharedVertex(v) for v in sorted(counts) if counts[v] > 1]

    inverses = {}
    present = []
    for a, b in m:
        block = c.components.get((a, b))
        if block is None:
            errors.append(NotAnEdge(a, b))
            continue
        present.append((a, b))
        if block.rows != block.cols:
            errors.append(NonSquare(a, b))
            continue
        try:
            inverses[a, b] = mx.inverse(c.ring, block)
        except NotInvertibleError:
            errors.append(NotInvertible(a, b))

    g = Digraph(tuple(c.ids()), _morse_edges(c, present))
    cycle = find_cycle(g)
    if cycle is not None:
        errors.append(Cycle(tuple(cycle)))
    return MatchingValidation(errors, inverses if not errors else {})


def require_valid(c: BasedComplex, m: Matching) -> dict[tuple[str, str], Matrix]:
    """Like :func:`validate_matching` but raises on failure and returns the inverses."""
    result = validate_matching(c, m)
    if not result.ok:
        raise InvalidMatchingError(result.errors)
    return result.inverses


def critical_cells(c: BasedComplex, m: Matching) -> list[str]:
    matched = m.matched_cells()
    return [cell.id for cell in c.cells if cell.id not in matched]

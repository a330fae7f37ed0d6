"""Path sums over the Morse graph and the direct reduction built from them.

For a Morse matching ``M`` every directed path in the Morse graph carries a
linear map: a plain edge ``s -> t`` contributes the block ``d_{t,s}`` and a
reversed matched edge ``s -> t`` contributes ``-d_{s,t}^{-1}``.  The sum over
all paths from ``alpha`` to ``beta`` (the empty path giving the identity) is
``gamma[beta]`` in the table returned by :func:`gamma_from`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import matrix as mx
from .complex import BasedComplex, BlockMap, complex_from_map
from .errors import AmtError
from .matrix import Matrix
from .morsegraph import (
    MATCHED,
    Digraph,
    Matching,
    build_morse_graph,
    critical_cells,
    require_valid,
    topological_order,
)

PATH_CAP = 10**6


class PathExplosion(AmtError):
    pass


@dataclass(frozen=True)
class MorseData:
    """A validated matching together with everything the path sums need."""

    complex: BasedComplex
    matching: Matching
    graph: Digraph
    order: tuple[str, ...]
    edge_maps: dict[tuple[str, str], Matrix]

    @property
    def position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.order)}


def morse_data(c: BasedComplex, m: Matching, inverses=None) -> MorseData:
    if inverses is None:
        inverses = require_valid(c, m)
    g = build_morse_graph(c, m)
    order = tuple(topological_order(g))
    maps = {}
    for (a, b), label in g.edges.items():
        if label == MATCHED:
            # edge a -> b reverses the matched edge b -> a
            maps[a, b] = mx.neg(c.ring, inverses[b, a])
        else:
            maps[a, b] = c.components[a, b]
    return MorseData(c, m, g, order, maps)


def gamma_from(data: MorseData, alpha: str) -> dict[str, Matrix]:
    """All nonzero path sums out of ``alpha``, by dynamic programming in topological order."""
    c = data.complex
    ring = c.ring
    acc = {alpha: Matrix.identity(ring, c.cell(alpha).rank)}
    succ = data.graph.successors
    start = data.order.index(alpha)
    for v in data.order[start:]:
        here = acc.get(v)
        if here is None:
            continue
        if here.is_zero():
            del acc[v]
            continue
        for w in succ[v]:
            contrib = mx.matmul(ring, data.edge_maps[v, w], here)
            acc[w] = mx.add(ring, acc[w], contrib) if w in acc else contrib
    return {b: m for b, m in acc.items() if not m.is_zero()}


def gamma_bruteforce(data: MorseData, alpha: str, beta: str) -> Matrix | None:
    """Literal sum over every directed path; a test oracle for small complexes."""
    c = data.complex
    ring = c.ring
    succ = data.graph.successors
    total = None
    paths = 0
    stack = [(alpha, Matrix.identity(ring, c.cell(alpha).rank))]
    while stack:
        v, composite = stack.pop()
        if v == beta:
            paths += 1
            if paths > PATH_CAP:
                raise PathExplosion(f"more than {PATH_CAP} paths from {alpha} to {beta}")
            total = composite if total is None else mx.add(ring, total, composite)
        for w in succ[v]:
            stack.append((w, mx.matmul(ring, data.edge_maps[v, w], composite)))
    if total is None or total.is_zero():
        return None
    return total


@dataclass
class ReductionResult:
    reduced: BasedComplex
    f: BlockMap
    g: BlockMap
    h: BlockMap
    matching: Matching
    stats: dict = field(default_factory=dict)


def reduction_stats(c: BasedComplex, reduced: BasedComplex, m: Matching) -> dict:
    return {
        "cells_before": len(c),
        "cells_after": len(reduced),
        "components_before": len(c.components),
        "components_after": len(reduced.components),
        "matching_size": len(m),
    }


def reduce_direct(c: BasedComplex, m: Matching, data: MorseData | None = None) -> ReductionResult:
    """Reduce ``c`` onto its critical cells using path sums only."""
    if data is None:
        data = morse_data(c, m)
    critical = set(critical_cells(c, m))
    table = c.table
    small = {cid: cell for cid, cell in table.items() if cid in critical}

    d_comps, f_comps, g_comps, h_comps = {}, {}, {}, {}
    for alpha, cell in table.items():
        n = cell.degree
        for beta, block in gamma_from(data, alpha).items():
            deg = table[beta].degree
            if deg == n + 1:
                h_comps[alpha, beta] = block
            elif deg == n:
                if beta in critical:
                    f_comps[alpha, beta] = block
                if alpha in critical:
                    g_comps[alpha, beta] = block
            elif deg == n - 1 and alpha in critical and beta in critical:
                d_comps[alpha, beta] = block

    ring = c.ring
    reduced = complex_from_map(ring, small.values(), BlockMap(ring, -1, small, small, d_comps))
    f = BlockMap(ring, 0, table, small, f_comps)
    g = BlockMap(ring, 0, small, table, g_comps)
    h = BlockMap(ring, 1, table, table, h_comps)
    return ReductionResult(reduced, f, g, h, m, reduction_stats(c, reduced, m))

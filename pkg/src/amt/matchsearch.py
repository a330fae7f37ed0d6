"""Greedy construction of Morse matchings."""

from __future__ import annotations

from . import matrix as mx
from .complex import BasedComplex
from .morsegraph import Matching
from .rng import Lcg64


def candidate_edges(c: BasedComplex) -> list[tuple[str, str]]:
    """Digraph edges whose block is square and invertible, in lexicographic order."""
    return [
        (a, b) for (a, b), block in sorted(c.components.items())
        if mx.is_invertible(c.ring, block)
    ]


def _reaches(succ: dict[str, set], start: str, goal: str, skip: tuple[str, str]) -> bool:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in succ[v]:
            if (v, w) == skip or w in seen:
                continue
            if w == goal:
                return True
            seen.add(w)
            stack.append(w)
    return False


def greedy_matching(c: BasedComplex, seed: int = 0) -> Matching:
    """Seed-shuffled greedy Morse matching.

    Candidates are visited in shuffled order and kept when both ends are free
    and reversing the edge leaves the Morse graph acyclic.  Passes repeat until
    nothing changes, since a reversal made late can break the path that
    blocked an earlier candidate; the result is therefore maximal.
    """
    order = candidate_edges(c)
    Lcg64(seed).shuffle(order)

    succ = {cid: set() for cid in c.ids()}
    for a, b in c.components:
        succ[a].add(b)

    matched: set[str] = set()
    chosen = []
    changed = True
    while changed:
        changed = False
        for a, b in order:
            if a in matched or b in matched:
                continue
            # reversing a->b closes a cycle iff b is still reachable from a
            if _reaches(succ, a, b, skip=(a, b)):
                continue
            succ[a].discard(b)
            succ[b].add(a)
            matched.update((a, b))
            chosen.append((a, b))
            changed = True
    return Matching(chosen)

"""Contractions and the basic perturbation lemma.

:func:`perturb` is generic: it accepts any contraction and any perturbation
whose series ``t (h t)^n`` dies out.  The Morse-specific pieces are the
trivial contraction onto the critical cells and the splitting of ``d`` into
its matched and unmatched parts; :func:`reduce_hpt` chains them together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import BasedComplex, BlockMap, Violation, complex_from_map
from .errors import ContractionError, DSquaredError, NilpotenceError, StructureError
from .gamma import ReductionResult, reduction_stats
from . import matrix as mx
from .matrix import Matrix
from .morsegraph import Matching, build_morse_graph, critical_cells, longest_path_length, require_valid


@dataclass(frozen=True)
class Contraction:
    big: BasedComplex
    small: BasedComplex
    f: BlockMap  # big -> small
    g: BlockMap  # small -> big
    h: BlockMap  # big -> big, degree +1


@dataclass(frozen=True)
class Perturbed:
    contraction: Contraction
    t_small: BlockMap  # induced perturbation t' = f S g of the small differential
    series: BlockMap  # S = sum_n t (h t)^n
    terms: int  # series terms evaluated, including the first vanishing one
    bound: int


def _check_shift(t: BlockMap, c: BasedComplex):
    if t.shift != -1:
        raise StructureError(f"perturbation must have degree -1, got {t.shift:+d}")
    if dict(t.source) != dict(c.table) or dict(t.target) != dict(c.table):
        raise StructureError("perturbation is defined on a different set of cells")


def check_perturbation(c: BasedComplex, t: BlockMap) -> list[Violation]:
    """Nonzero entries of ``(d + t)^2``; empty means ``t`` is a perturbation."""
    _check_shift(t, c)
    total = c.d + t
    sq = total @ total
    out = [Violation(e.target, e.source, e.row, e.col, e.value) for e in sq.entries()]
    out.sort(key=lambda v: (v.target, v.source, v.row, v.col))
    return out


def default_bound(c: BasedComplex) -> int:
    # a nilpotent endomorphism of a free module of rank N has (ht)^N = 0
    return sum(cell.rank for cell in c.cells) + 1


def morse_bound(c: BasedComplex, m: Matching) -> int:
    return longest_path_length(build_morse_graph(c, m)) + 1


def perturb(con: Contraction, t: BlockMap, max_iterations: int | None = None) -> Perturbed:
    """Transfer the perturbation ``t`` of ``con.big`` along the contraction.

    Returns the contraction ``(f', g', h')`` between ``big`` with differential
    ``d + t`` and ``small`` with differential ``d + t'``, already checked
    against all contraction identities.
    """
    from .verify import verify_contraction

    big, small = con.big, con.small
    _check_shift(t, big)
    bound = default_bound(big) if max_iterations is None else max_iterations
    if bound < 1:
        raise ValueError("max_iterations must be >= 1")

    f, g, h = con.f, con.g, con.h
    ht = h @ t
    term = t
    series = BlockMap(big.ring, -1, big.table, big.table, {})
    for n in range(bound):
        if not term:
            # every later term factors through this one
            terms = n + 1
            break
        series = series + term
        term = term @ ht
    else:
        raise NilpotenceError(bound)

    shs = series @ h
    f2 = f + f @ shs
    g2 = g + h @ (series @ g)
    h2 = h + h @ shs
    t_small = f @ (series @ g)
    try:
        big2 = big.with_differential(big.d + t)
        small2 = small.with_differential(small.d + t_small)
    except DSquaredError as exc:
        raise ContractionError(f"perturbed complex is not a complex: {exc}") from exc

    out = Contraction(big2, small2, f2, g2, h2)
    report = verify_contraction(out)
    if not report.ok:
        raise ContractionError("perturbed data is not a contraction:\n" + str(report), report)
    return Perturbed(out, t_small, series, terms, bound)


def split_differential(c: BasedComplex, m: Matching) -> tuple[BlockMap, BlockMap]:
    """Return ``(d_matched, t)`` with ``d_matched`` the matched blocks and ``t = d - d_matched``."""
    require_valid(c, m)
    matched = {k: v for k, v in c.components.items() if k in m}
    rest = {k: v for k, v in c.components.items() if k not in m}
    table = c.table
    return (
        BlockMap(c.ring, -1, table, table, matched),
        BlockMap(c.ring, -1, table, table, rest),
    )


def trivial_morse_contraction(c: BasedComplex, m: Matching, inverses=None) -> Contraction:
    """Contraction of the matched-part complex onto the critical cells (zero differential)."""
    from .verify import verify_contraction

    if inverses is None:
        inverses = require_valid(c, m)
    ring = c.ring
    table = c.table
    d_matched, _ = split_differential(c, m)
    big = complex_from_map(ring, c.cells, d_matched)

    critical = critical_cells(c, m)
    small_cells = {cid: table[cid] for cid in critical}
    small = complex_from_map(ring, small_cells.values(), BlockMap(ring, -1, small_cells, small_cells, {}))

    ident = {(cid, cid): Matrix.identity(ring, table[cid].rank) for cid in critical}
    f = BlockMap(ring, 0, table, small_cells, ident)
    g = BlockMap(ring, 0, small_cells, table, ident)
    # lower end of each matched edge goes up to the upper end
    h = BlockMap(ring, 1, table, table, {
        (b, a): mx.neg(ring, inverses[a, b]) for a, b in m
    })

    con = Contraction(big, small, f, g, h)
    report = verify_contraction(con)
    if not report.ok:
        raise ContractionError("trivial Morse contraction failed its identities:\n" + str(report), report)
    return con


def reduce_hpt(c: BasedComplex, m: Matching, max_iterations: int | None = None):
    """Reduce ``c`` onto its critical cells by perturbing the trivial Morse contraction.

    Returns ``(ReductionResult, Perturbed)``.  The series bound defaults to the
    longest Morse-graph path plus one.
    """
    inverses = require_valid(c, m)
    base = trivial_morse_contraction(c, m, inverses)
    _, t = split_differential(c, m)
    t = BlockMap(c.ring, -1, base.big.table, base.big.table, t.components)
    bound = morse_bound(c, m) if max_iterations is None else max_iterations
    result = perturb(base, t, bound)
    con = result.contraction
    stats = reduction_stats(c, con.small, m)
    stats["series_terms"] = result.terms
    stats["series_bound"] = bound
    return ReductionResult(con.small, con.f, con.g, con.h, m, stats), result


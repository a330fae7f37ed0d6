"""Based chain complexes and block-sparse graded maps.

A based complex has one free summand ``C_alpha`` per cell ``alpha``; its
differential and every other graded map are stored as sparse collections of
dense blocks keyed by ``(source id, target id)``.  A missing block is zero and
zero blocks are never stored.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import matrix as mx
from .errors import DSquaredError, StructureError
from .matrix import Matrix
from .ring import RingSpec


@dataclass(frozen=True)
class Cell:
    id: str
    degree: int
    rank: int = 1

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise StructureError("cell id must be a nonempty string")
        if self.rank < 1:
            raise StructureError(f"cell {self.id}: rank must be >= 1, got {self.rank}")


def cell_key(cell: Cell):
    return (cell.degree, cell.id)


def _cell_table(cells: Iterable[Cell]) -> dict[str, Cell]:
    table = {}
    for c in sorted(cells, key=cell_key):
        if c.id in table:
            raise StructureError(f"duplicate cell id {c.id!r}")
        table[c.id] = c
    return table


class Entry(NamedTuple):
    """One nonzero entry of a block map, located by block and position."""
    source: str
    target: str
    row: int
    col: int
    value: object


@dataclass(frozen=True)
class BlockMap:
    """A graded map of fixed degree ``shift`` stored as sparse blocks.

    ``components[(a, b)]`` is the block from summand ``a`` (in ``source``) to
    summand ``b`` (in ``target``); it has ``rank(b)`` rows and ``rank(a)``
    columns.  Zero blocks passed in are dropped.
    """

    ring: RingSpec
    shift: int
    source: Mapping[str, Cell]
    target: Mapping[str, Cell]
    components: Mapping[tuple[str, str], Matrix] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (a, b), m in sorted(self.components.items()):
            src, tgt = self.source.get(a), self.target.get(b)
            if src is None or tgt is None:
                raise StructureError(f"block ({a} -> {b}) references an unknown cell")
            if tgt.degree != src.degree + self.shift:
                raise StructureError(
                    f"block ({a} -> {b}) goes from degree {src.degree} to {tgt.degree}, "
                    f"expected shift {self.shift:+d}"
                )
            if m.shape != (tgt.rank, src.rank):
                raise StructureError(
                    f"block ({a} -> {b}) is {m.rows}x{m.cols}, expected {tgt.rank}x{src.rank}"
                )
            if not m.is_zero():
                clean[a, b] = m
        object.__setattr__(self, "components", clean)

    def __bool__(self):
        return bool(self.components)

    def __len__(self):
        return len(self.components)

    def block(self, src: str, tgt: str) -> Matrix | None:
        return self.components.get((src, tgt))

    def entries(self):
        for (a, b), m in self.components.items():
            for i, j, x in m.nonzero_entries():
                yield Entry(a, b, i, j, x)

    def restrict(self, sources=None, targets=None) -> BlockMap:
        """Keep only blocks whose source/target lie in the given id sets."""
        src = self.source if sources is None else {k: v for k, v in self.source.items() if k in sources}
        tgt = self.target if targets is None else {k: v for k, v in self.target.items() if k in targets}
        comps = {k: m for k, m in self.components.items() if k[0] in src and k[1] in tgt}
        return BlockMap(self.ring, self.shift, src, tgt, comps)

    def __add__(self, other: BlockMap) -> BlockMap:
        return add_block_maps(self, other)

    def __sub__(self, other: BlockMap) -> BlockMap:
        return add_block_maps(self, negate(other))

    def __neg__(self) -> BlockMap:
        return negate(self)

    def __matmul__(self, other: BlockMap) -> BlockMap:
        return compose_block_maps(self, other)


def identity_map(ring: RingSpec, cells: Mapping[str, Cell] | Iterable[Cell]) -> BlockMap:
    table = dict(cells) if isinstance(cells, Mapping) else _cell_table(cells)
    comps = {(c.id, c.id): Matrix.identity(ring, c.rank) for c in table.values()}
    return BlockMap(ring, 0, table, table, comps)


def zero_map(ring: RingSpec, shift: int, source, target) -> BlockMap:
    return BlockMap(ring, shift, dict(source), dict(target), {})


def same_cells(a: Mapping[str, Cell], b: Mapping[str, Cell]) -> bool:
    return a.keys() == b.keys() and all(a[k] == b[k] for k in a)


def add_block_maps(a: BlockMap, b: BlockMap) -> BlockMap:
    if a.shift != b.shift:
        raise StructureError(f"cannot add maps of degree {a.shift:+d} and {b.shift:+d}")
    if not (same_cells(a.source, b.source) and same_cells(a.target, b.target)):
        raise StructureError("cannot add maps between different complexes")
    ring = a.ring
    comps = dict(a.components)
    for k, m in b.components.items():
        comps[k] = mx.add(ring, comps[k], m) if k in comps else m
    return BlockMap(ring, a.shift, a.source, a.target, comps)


def negate(a: BlockMap) -> BlockMap:
    comps = {k: mx.neg(a.ring, m) for k, m in a.components.items()}
    return BlockMap(a.ring, a.shift, a.source, a.target, comps)


def compose_block_maps(outer: BlockMap, inner: BlockMap) -> BlockMap:
    """Return ``outer o inner`` (apply ``inner`` first)."""
    if not same_cells(inner.target, outer.source):
        raise StructureError("composition: inner target and outer source differ")
    ring = outer.ring
    by_source = defaultdict(list)
    for (b, c), m in outer.components.items():
        by_source[b].append((c, m))
    acc: dict[tuple[str, str], Matrix] = {}
    for (a, b), m_in in inner.components.items():
        for c, m_out in by_source.get(b, ()):
            prod = mx.matmul(ring, m_out, m_in)
            key = (a, c)
            acc[key] = mx.add(ring, acc[key], prod) if key in acc else prod
    return BlockMap(ring, outer.shift + inner.shift, inner.source, outer.target, acc)


def apply_block_map(m: BlockMap, src: str, vector: Sequence) -> dict[str, tuple]:
    """Evaluate ``m`` on an element of the summand ``src``; zero images are omitted."""
    cell = m.source.get(src)
    if cell is None:
        raise StructureError(f"unknown cell {src!r}")
    if len(vector) != cell.rank:
        raise StructureError(f"cell {src} has rank {cell.rank}, got a vector of length {len(vector)}")
    ring = m.ring
    col = Matrix(cell.rank, 1, tuple(ring.element(x) for x in vector))
    out = {}
    for (a, b), block in m.components.items():
        if a != src:
            continue
        image = mx.matmul(ring, block, col)
        if not image.is_zero():
            out[b] = image.entries
    return out


class Violation(NamedTuple):
    """A nonzero entry of ``d o d`` from summand ``source`` to ``target``."""
    target: str
    source: str
    row: int
    col: int
    value: object


@dataclass(frozen=True)
class BasedComplex:
    ring: RingSpec
    cells: tuple[Cell, ...]
    d: BlockMap

    @property
    def table(self) -> Mapping[str, Cell]:
        return self.d.source

    def cell(self, cid: str) -> Cell:
        try:
            return self.table[cid]
        except KeyError:
            raise StructureError(f"unknown cell {cid!r}") from None

    def __contains__(self, cid) -> bool:
        return cid in self.table

    def __len__(self):
        return len(self.cells)

    def ids(self) -> list[str]:
        return [c.id for c in self.cells]

    def degrees(self) -> list[int]:
        return sorted({c.degree for c in self.cells})

    def cells_in_degree(self, n: int) -> list[Cell]:
        return [c for c in self.cells if c.degree == n]

    @property
    def components(self) -> Mapping[tuple[str, str], Matrix]:
        return self.d.components

    def identity(self) -> BlockMap:
        return identity_map(self.ring, self.table)

    def with_differential(self, d: BlockMap) -> BasedComplex:
        return complex_from_map(self.ring, self.cells, d)


def check_d_squared(c: BasedComplex) -> list[Violation]:
    dd = compose_block_maps(c.d, c.d)
    out = [Violation(e.target, e.source, e.row, e.col, e.value) for e in dd.entries()]
    out.sort(key=lambda v: (v.target, v.source, v.row, v.col))
    return out


def complex_from_map(ring: RingSpec, cells: Iterable[Cell], d: BlockMap) -> BasedComplex:
    table = _cell_table(cells)
    if d.shift != -1:
        raise StructureError(f"differential must have degree -1, got {d.shift:+d}")
    if not (same_cells(d.source, table) and same_cells(d.target, table)):
        raise StructureError("differential is defined on a different set of cells")
    cx = BasedComplex(ring, tuple(table.values()), BlockMap(ring, -1, table, table, d.components))
    violations = check_d_squared(cx)
    if violations:
        raise DSquaredError(violations)
    return cx


def build_complex(
    ring: RingSpec,
    cells: Iterable[Cell],
    components: Iterable[tuple[str, str, Matrix]] = (),
) -> BasedComplex:
    """Validate and assemble a based complex.

    ``components`` lists ``(src, tgt, matrix)`` triples giving ``d_{tgt,src}``.
    Raises :class:`StructureError` for malformed data and
    :class:`DSquaredError` when the differential does not square to zero.
    """
    table = _cell_table(cells)
    comps = {}
    for src, tgt, m in components:
        if (src, tgt) in comps:
            raise StructureError(f"duplicate component ({src} -> {tgt})")
        comps[src, tgt] = m
    d = BlockMap(ring, -1, table, table, comps)
    return complex_from_map(ring, table.values(), d)

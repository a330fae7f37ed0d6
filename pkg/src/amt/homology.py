"""Homology of based complexes: field ranks and integer Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import matrix as mx
from .complex import BasedComplex
from .errors import StructureError
from .matrix import Matrix


def smith_normal_form(mat) -> list[int]:
    """Smith invariants of an integer matrix.

    ``mat`` is a :class:`~amt.matrix.Matrix` or a list of integer rows.  The
    result has ``min(rows, cols)`` entries: ``d_1 | d_2 | ... | d_r`` followed
    by zeros.  Pivots are chosen with smallest absolute value, scanning rows
    before columns.
    """
    rows = mat.as_rows() if isinstance(mat, Matrix) else [list(r) for r in mat]
    rows = [[int(x) for x in r] for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    diag = []
    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    x = rows[i][j]
                    if x and (pivot is None or abs(x) < pivot[0]):
                        pivot = (abs(x), i, j)
            if pivot is None:
                return diag + [0] * (min(m, n) - len(diag))
            _, i, j = pivot
            rows[t], rows[i] = rows[i], rows[t]
            for r in rows:
                r[t], r[j] = r[j], r[t]
            p = rows[t][t]

            clean = True
            for i in range(t + 1, m):
                q = rows[i][t] // p
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[t])]
                clean &= rows[i][t] == 0
            for j in range(t + 1, n):
                q = rows[t][j] // p
                if q:
                    for r in rows[t:]:
                        r[j] -= q * r[t]
                clean &= rows[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if rows[i][j] % p),
                None,
            )
            if bad is None:
                break
            rows[t] = [x + y for x, y in zip(rows[t], rows[bad])]
        diag.append(abs(rows[t][t]))
    return diag


@dataclass
class HomologyProfile:
    """Betti numbers and (over Z) torsion coefficients; missing degrees are zero."""

    ring: str
    betti: dict[int, int] = field(default_factory=dict)
    torsion: dict[int, list[int]] = field(default_factory=dict)

    def __post_init__(self):
        self.betti = {k: v for k, v in sorted(self.betti.items()) if v}
        self.torsion = {k: list(v) for k, v in sorted(self.torsion.items()) if v}

    def betti_numbers(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(self.betti.get(n, 0) for n in range(lo, hi + 1))

    def describe(self, degrees) -> list[str]:
        base = "Z" if self.ring == "Z" else self.ring
        lines = []
        for n in degrees:
            parts = [f"{base}^{self.betti.get(n, 0)}"]
            parts += [f"Z/{q}" for q in self.torsion.get(n, [])]
            lines.append(f"deg {n}: " + " + ".join(parts))
        return lines


def boundary_matrix(c: BasedComplex, n: int) -> list[list]:
    """The full matrix of ``d: C_n -> C_{n-1}`` in (degree, id) cell order."""
    src = c.cells_in_degree(n)
    tgt = c.cells_in_degree(n - 1)
    col_off, row_off = {}, {}
    ncols = nrows = 0
    for cell in src:
        col_off[cell.id] = ncols
        ncols += cell.rank
    for cell in tgt:
        row_off[cell.id] = nrows
        nrows += cell.rank
    out = [[c.ring.zero] * ncols for _ in range(nrows)]
    for (a, b), block in c.components.items():
        if a not in col_off:
            continue
        r0, c0 = row_off[b], col_off[a]
        for i, j, x in block.nonzero_entries():
            out[r0 + i][c0 + j] = x
    return out


def _rank(c: BasedComplex, rows: list[list]) -> int:
    if not rows or not rows[0]:
        return 0
    return mx.rank(c.ring, Matrix(len(rows), len(rows[0]), tuple(x for r in rows for x in r)))


def homology(c: BasedComplex) -> HomologyProfile:
    degrees = c.degrees()
    if not degrees:
        return HomologyProfile(str(c.ring))
    lo, hi = degrees[0], degrees[-1]
    dims = {n: sum(cell.rank for cell in c.cells_in_degree(n)) for n in range(lo, hi + 2)}
    ranks, torsion = {}, {}
    for n in range(lo, hi + 2):
        rows = boundary_matrix(c, n)
        if c.ring.kind == "Z":
            inv = smith_normal_form(rows) if rows and rows[0] else []
            ranks[n] = sum(1 for q in inv if q)
            torsion[n - 1] = [q for q in inv if q > 1]
        else:
            ranks[n] = _rank(c, rows)
    betti = {n: dims[n] - ranks[n] - ranks[n + 1] for n in range(lo, hi + 1)}
    return HomologyProfile(str(c.ring), betti, torsion)


def compare_homology(a: BasedComplex, b: BasedComplex) -> bool:
    if a.ring != b.ring:
        raise StructureError(f"cannot compare homology over {a.ring} and {b.ring}")
    return homology(a) == homology(b)

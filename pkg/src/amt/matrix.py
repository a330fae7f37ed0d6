"""Small dense matrices over a :class:`~amt.ring.RingSpec`.

These are the blocks ``d_{beta,alpha}`` of a based complex.  Blocks are tiny
(usually 1x1), so everything here is straightforward row-major Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotInvertibleError, StructureError
from .ring import Element, RingSpec


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise StructureError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise StructureError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence]) -> Matrix:
        if not rows or not rows[0]:
            raise StructureError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise StructureError("ragged matrix rows")
        return cls(len(rows), width, tuple(ring.element(x) for r in rows for x in r))

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> Matrix:
        one, zero = ring.one, ring.zero
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def scalar(cls, ring: RingSpec, x) -> Matrix:
        return cls(1, 1, (ring.element(x),))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def as_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def nonzero_entries(self):
        """Yield ``(row, col, value)`` for every nonzero entry in row-major order."""
        for k, x in enumerate(self.entries):
            if x:
                yield k // self.cols, k % self.cols, x


def matmul(ring: RingSpec, a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise StructureError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    n, m, k = a.rows, b.cols, a.cols
    ae, be = a.entries, b.entries
    if n == m == k == 1:
        return Matrix(1, 1, (ring.reduce(ae[0] * be[0]),))
    out = []
    for i in range(n):
        arow = ae[i * k:(i + 1) * k]
        for j in range(m):
            out.append(ring.reduce(sum(arow[t] * be[t * m + j] for t in range(k))))
    return Matrix(n, m, tuple(out))


def add(ring: RingSpec, a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise StructureError(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    return Matrix(a.rows, a.cols, tuple(ring.reduce(x + y) for x, y in zip(a.entries, b.entries)))


def sub(ring: RingSpec, a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise StructureError(f"cannot subtract {b.rows}x{b.cols} from {a.rows}x{a.cols}")
    return Matrix(a.rows, a.cols, tuple(ring.reduce(x - y) for x, y in zip(a.entries, b.entries)))


def neg(ring: RingSpec, a: Matrix) -> Matrix:
    return Matrix(a.rows, a.cols, tuple(ring.reduce(-x) for x in a.entries))


def _echelon(ring: RingSpec, rows: list[list]) -> tuple[int, Element]:
    """Gaussian elimination in place over a field; returns (rank, det-sign-and-pivots product)."""
    n, m = len(rows), len(rows[0])
    rank, det = 0, ring.one
    for col in range(m):
        pivot = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if pivot is None:
            det = ring.zero
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            det = ring.reduce(-det)
        inv = ring.invert(rows[rank][col])
        det = ring.reduce(det * rows[rank][col])
        for r in range(rank + 1, n):
            if rows[r][col] != 0:
                factor = ring.reduce(rows[r][col] * inv)
                rows[r] = [ring.reduce(x - factor * y) for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == n:
            break
    return rank, det


def _bareiss_det(a: Matrix) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = a.rows
    m = [list(a.row(i)) for i in range(n)]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det(ring: RingSpec, a: Matrix) -> Element:
    if a.rows != a.cols:
        raise StructureError("determinant of a non-square matrix")
    if ring.kind == "Z":
        return _bareiss_det(a)
    rows = [list(a.row(i)) for i in range(a.rows)]
    rank, d = _echelon(ring, rows)
    return d if rank == a.rows else ring.zero


def rank(ring: RingSpec, a: Matrix) -> int:
    """Rank over a field.  Integer matrices are ranked over the rationals."""
    if ring.kind == "Z":
        from .ring import QQ
        ring = QQ
    rows = [[ring.reduce(x) for x in a.row(i)] for i in range(a.rows)]
    return _echelon(ring, rows)[0]


def _minor(a: Matrix, i: int, j: int) -> Matrix:
    n = a.rows
    return Matrix(n - 1, n - 1, tuple(
        a[r, c] for r in range(n) if r != i for c in range(n) if c != j
    ))


def inverse(ring: RingSpec, a: Matrix) -> Matrix:
    """Exact inverse; raises :class:`NotInvertibleError` if the block is not a unit."""
    if a.rows != a.cols:
        raise StructureError(f"{a.rows}x{a.cols} matrix is not square")
    n = a.rows
    if ring.kind == "Z":
        d = _bareiss_det(a)
        if d not in (1, -1):
            raise NotInvertibleError(f"determinant {d} is not a unit in Z")
        if n == 1:
            return Matrix(1, 1, (d,))
        # adjugate / det, with det = +-1
        return Matrix(n, n, tuple(
            d * (-1) ** (i + j) * _bareiss_det(_minor(a, j, i))
            for i in range(n) for j in range(n)
        ))
    if n == 1:
        return Matrix(1, 1, (ring.invert(a.entries[0]),))
    one, zero = ring.one, ring.zero
    aug = [list(a.row(i)) + [one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise NotInvertibleError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ring.invert(aug[col][col])
        aug[col] = [ring.reduce(x * inv) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [ring.reduce(x - factor * y) for x, y in zip(aug[r], aug[col])]
    return Matrix(n, n, tuple(x for r in aug for x in r[n:]))


def is_invertible(ring: RingSpec, a: Matrix) -> bool:
    if a.rows != a.cols:
        return False
    return ring.is_unit(det(ring, a))

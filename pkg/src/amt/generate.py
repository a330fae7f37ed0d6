"""Seeded random based complexes.

Construction: pair some cells with a free cell of equal rank one degree
down through an invertible block, so that no cell is both a source and a
target (the square is trivially zero), then conjugate the differential by
random elementary changes of basis ``1 + c * e`` inside a degree.  Conjugation preserves ``d^2 = 0`` and the
degree of every block, so the output is a complex by construction; the
final :func:`~amt.complex.build_complex` call re-checks it anyway.
"""

from __future__ import annotations

from .complex import BasedComplex, Cell, build_complex
from .matrix import Matrix
from .ring import RingSpec
from .rng import Lcg64


def _scalars(ring: RingSpec) -> list:
    if ring.kind == "Z":
        return [1, -1]
    return [x for x in (ring.reduce(v) for v in (1, -1, 2, -2, 3)) if x != 0]


def gen_random(
    cells: int,
    max_degree: int,
    max_rank: int,
    density: float,
    ring: RingSpec,
    seed: int,
) -> BasedComplex:
    if cells < 1:
        raise ValueError("cells must be >= 1")
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")

    rng = Lcg64(seed)
    scalars = _scalars(ring)
    width = len(str(cells - 1))
    cell_list = [
        Cell(f"c{k:0{width}d}", rng.randint(0, max_degree), rng.randint(1, max_rank))
        for k in range(cells)
    ]

    basis = [(c, i) for c in cell_list for i in range(c.rank)]
    index = {(c.id, i): k for k, (c, i) in enumerate(basis)}

    n = len(basis)
    D = [[ring.zero] * n for _ in range(n)]
    is_target = set()
    for deg in sorted({c.degree for c in cell_list}, reverse=True):
        free_below = [c for c in cell_list if c.degree == deg - 1]
        for a in (c for c in cell_list if c.degree == deg):
            if a.id in is_target or rng.random() >= density:
                continue
            fits = [b for b in free_below if b.rank == a.rank]
            if not fits:
                continue
            b = fits[rng.below(len(fits))]
            free_below.remove(b)
            is_target.add(b.id)
            # unit upper-triangular block: invertible over any of the rings
            for i in range(a.rank):
                D[index[b.id, i]][index[a.id, i]] = rng.choice(scalars)
                for j in range(i + 1, a.rank):
                    D[index[b.id, i]][index[a.id, j]] = ring.reduce(rng.randint(-1, 1))

    for _ in range(round(density * cells * 2)):
        beta = rng.choice(cell_list)
        peers = [c for c in cell_list if c.degree == beta.degree and c.id != beta.id]
        if not peers:
            continue
        gamma = rng.choice(peers)
        src = index[beta.id, rng.below(beta.rank)]
        dst = index[gamma.id, rng.below(gamma.rank)]
        lam = rng.choice(scalars)
        # D <- E D E^-1 with E = 1 + lam * e_{dst,src}
        D[dst] = [ring.reduce(x + lam * y) for x, y in zip(D[dst], D[src])]
        for row in D:
            row[src] = ring.reduce(row[src] - lam * row[dst])

    components = []
    for a in cell_list:
        for b in cell_list:
            if b.degree != a.degree - 1:
                continue
            entries = tuple(
                D[index[b.id, i]][index[a.id, j]] for i in range(b.rank) for j in range(a.rank)
            )
            if any(entries):
                components.append((a.id, b.id, Matrix(b.rank, a.rank, entries)))
    return build_complex(ring, cell_list, components)

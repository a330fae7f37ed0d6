from __future__ import annotations

from functools import lru_cache

import pytest

from amt.complex import Cell, build_complex
from amt.fixtures import load_fixture
from amt.generate import gen_random
from amt.matrix import Matrix
from amt.ring import GF, QQ, ZZ

F5 = GF(5)

ACCEPTANCE_LINES: list[str] = []


def make(ring, cells, comps):
    """Build a complex from ``[(id, degree, rank)]`` and ``[(src, tgt, rows)]``."""
    return build_complex(
        ring,
        [Cell(*c) for c in cells],
        [(a, b, Matrix.from_rows(ring, rows)) for a, b, rows in comps],
    )


def dense(c):
    """Full matrix of d in (degree, id) basis order, built without the block machinery."""
    basis = [(cell.id, i) for cell in c.cells for i in range(cell.rank)]
    pos = {b: k for k, b in enumerate(basis)}
    out = [[0] * len(basis) for _ in basis]
    for (a, b), m in c.components.items():
        for i in range(m.rows):
            for j in range(m.cols):
                out[pos[b, i]][pos[a, j]] = m[i, j]
    return basis, out


def dense_square(c):
    basis, d = dense(c)
    n = len(basis)
    return basis, [
        [c.ring.reduce(sum(d[i][k] * d[k][j] for k in range(n))) for j in range(n)]
        for i in range(n)
    ]


@lru_cache(maxsize=None)
def random_corpus(count: int = 200):
    """Seeded random complexes: <= 25 cells, rank <= 3, alternating Q and F5."""
    out = []
    for seed in range(count):
        ring = QQ if seed % 2 == 0 else F5
        cells = 3 + (seed * 7) % 23
        max_degree = 1 + seed % 4
        max_rank = 1 + (seed // 2) % 3
        density = 0.3 + 0.6 * ((seed * 13) % 10) / 10
        out.append((seed, gen_random(cells, max_degree, max_rank, density, ring, seed)))
    return tuple(out)


@pytest.fixture
def interval():
    return load_fixture("interval")


@pytest.fixture
def circle():
    return load_fixture("circle")


@pytest.fixture
def simplex2():
    return load_fixture("simplex2")


@pytest.fixture
def four_cycle():
    return make(
        ZZ,
        [("a", 1, 1), ("b", 1, 1), ("x", 0, 1), ("y", 0, 1)],
        [("a", "x", [[1]]), ("a", "y", [[1]]), ("b", "x", [[1]]), ("b", "y", [[1]])],
    )


@pytest.fixture
def gamma_example():
    # x, y in degree 0; a, b in degree 1; d_{x,a} = d_{y,a} = d_{x,b} = 1
    return make(
        ZZ,
        [("x", 0, 1), ("y", 0, 1), ("a", 1, 1), ("b", 1, 1)],
        [("a", "x", [[1]]), ("a", "y", [[1]]), ("b", "x", [[1]])],
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

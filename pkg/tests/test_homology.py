from itertools import combinations, permutations
from math import gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from amt.errors import StructureError
from amt.fixtures import load_fixture
from amt.gamma import reduce_direct
from amt.homology import HomologyProfile, compare_homology, homology, smith_normal_form
from amt.matchsearch import greedy_matching
from amt.ring import GF, QQ, ZZ

from conftest import make


def leibniz(rows):
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total += (-1) ** inversions * prod(rows[i][p[i]] for i in range(n))
    return total


def minor_gcds(rows):
    """D_k = gcd of all k x k minors, for k = 1 .. min(m, n)."""
    m, n = len(rows), len(rows[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, leibniz([[rows[i][j] for j in cs] for i in rs]))
        out.append(g)
    return out


def invariants_oracle(rows):
    # d_k = D_k / D_{k-1}, and zero once D_k vanishes
    out, prev = [], 1
    for dk in minor_gcds(rows):
        if dk == 0:
            out.append(0)
            prev = 0
        else:
            out.append(dk // prev)
            prev = dk
    return out


@pytest.mark.parametrize("rows,expected", [
    ([[2, 4], [6, 8]], [2, 4]),
    ([[1, 0], [0, 1]], [1, 1]),
    ([[0]], [0]),
    ([[0, 0, 0], [0, 0, 0]], [0, 0]),
    ([[6]], [6]),
    ([[-3]], [3]),
    ([[2, 0], [0, 3]], [1, 6]),
    ([[4, 0], [0, 6]], [2, 12]),
])
def test_snf_examples(rows, expected):
    assert smith_normal_form(rows) == expected


matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_snf_matches_minor_gcds(rows):
    inv = smith_normal_form(rows)
    assert inv == invariants_oracle(rows)
    nz = [q for q in inv if q]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert inv[len(nz):] == [0] * (len(inv) - len(nz))


def test_fixture_homology():
    assert homology(load_fixture("interval")).betti == {0: 1}
    assert homology(load_fixture("circle")).betti == {0: 1, 1: 1}
    assert homology(load_fixture("sphere")).betti == {0: 1, 2: 1}
    assert homology(load_fixture("torus", QQ)).betti_numbers(0, 2) == (1, 2, 1)
    rp2 = homology(load_fixture("rp2"))
    assert rp2.betti_numbers(0, 2) == (1, 0, 0)
    assert rp2.torsion == {1: [2]}
    assert homology(load_fixture("rp2", GF(2))).betti_numbers(0, 2) == (1, 1, 1)
    assert homology(load_fixture("rp2", QQ)).betti_numbers(0, 2) == (1, 0, 0)


def test_describe():
    assert homology(load_fixture("circle")).describe([0, 1]) == ["deg 0: Z^1", "deg 1: Z^1"]
    assert homology(load_fixture("rp2")).describe([1]) == ["deg 1: Z^0 + Z/2"]
    assert HomologyProfile("F2", {0: 1}).describe([0, 1]) == ["deg 0: F2^1", "deg 1: F2^0"]


def test_ranked_cells():
    # the rank-2 edge has a boundary of rank 1, so one class survives in each degree
    c = make(ZZ, [("x", 0, 1), ("y", 0, 1), ("a", 1, 2)], [("a", "x", [[1, -1]]), ("a", "y", [[-1, 1]])])
    assert homology(c).betti == {0: 1, 1: 1}
    c = make(ZZ, [("v", 0, 2), ("e", 1, 1)], [("e", "v", [[2], [0]])])
    h = homology(c)
    assert h.betti == {0: 1} and h.torsion == {0: [2]}


def test_empty_complex():
    assert homology(make(QQ, [], [])).betti == {}


def test_compare_homology(circle, interval):
    assert compare_homology(circle, circle)
    assert not compare_homology(circle, interval)
    with pytest.raises(StructureError):
        compare_homology(circle, load_fixture("circle", QQ))


@pytest.mark.parametrize("name", ["circle", "sphere", "torus", "rp2"])
@pytest.mark.parametrize("ring", [ZZ, QQ, GF(2), GF(3)])
def test_reduction_preserves_homology(name, ring):
    c = load_fixture(name, ring)
    res = reduce_direct(c, greedy_matching(c, 3))
    assert compare_homology(c, res.reduced)


def test_field_betti_equals_rank_plus_torsion():
    # universal coefficients over Q: the rational Betti numbers are the free ranks over Z
    for name in ["circle", "sphere", "torus", "rp2"]:
        hz = homology(load_fixture(name))
        hq = homology(load_fixture(name, QQ))
        assert hz.betti == hq.betti

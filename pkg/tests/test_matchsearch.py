import pytest

from amt.matchsearch import candidate_edges, greedy_matching
from amt.morsegraph import Matching, critical_cells, validate_matching
from amt.ring import ZZ

from conftest import make, random_corpus


def test_single_cell():
    c = make(ZZ, [("x", 0, 1)], [])
    assert greedy_matching(c, 0) == Matching()


def test_interval_seeds(interval):
    seen = set()
    for seed in range(20):
        m = greedy_matching(interval, seed)
        assert m in (Matching([("a", "x")]), Matching([("a", "y")]))
        assert validate_matching(interval, m).ok
        seen.add(m)
    assert len(seen) == 2


def test_simplex_is_collapsed_for_every_seed(simplex2):
    for seed in range(100):
        m = greedy_matching(simplex2, seed)
        assert validate_matching(simplex2, m).ok
        assert len(m) == 3
        crit = critical_cells(simplex2, m)
        assert len(crit) == 1 and simplex2.cell(crit[0]).degree == 0


@pytest.mark.parametrize("seed", [0, 1, 2**63, 2**64 - 1])
def test_deterministic(seed):
    _, c = random_corpus()[17]
    assert greedy_matching(c, seed) == greedy_matching(c, seed)


def test_always_valid_on_random_suite():
    for seed, c in random_corpus():
        assert validate_matching(c, greedy_matching(c, seed)).ok


def test_maximal(circle, simplex2):
    fixtures = [circle, simplex2] + [c for _, c in random_corpus()[:60]]
    for k, c in enumerate(fixtures):
        m = greedy_matching(c, k)
        for edge in candidate_edges(c):
            if edge in m:
                continue
            bigger = Matching(set(m.edges) | {edge})
            assert not validate_matching(c, bigger).ok, (k, edge)

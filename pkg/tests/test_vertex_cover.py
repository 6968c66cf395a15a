import random
from fractions import Fraction

import pytest

from graphmod.errors import InvalidSolutionError
from graphmod.fixtures import LOCAL_SEARCH_VC_IMPROVED, crown_graph, local_search_vc_example, vc_lp_example
from graphmod.graph import Graph
from graphmod.oracles import min_vertex_cover, vc_local_improvement_exists
from graphmod.stats import SearchStats
from graphmod.vertex_cover import (
    HALF,
    exchange_distance,
    is_vertex_cover,
    lp_half_integral,
    ls_vertex_cover,
    nt_reduce,
    vc_above_lp,
)

from conftest import gnp


def test_lp_example():
    g = vc_lp_example()
    a = lp_half_integral(g)
    assert a.lp_value == Fraction(5, 2)
    assert [a.value[v] for v in range(6)] == [HALF, HALF, HALF, 1, 0, 0]
    red = nt_reduce(g, a)
    assert red.forced_in == {3} and red.forced_out == {4, 5}
    assert red.residual.vertices == (0, 1, 2)
    cover = vc_above_lp(g, 3)
    assert len(cover) == 3 and is_vertex_cover(g, cover)
    assert vc_above_lp(g, 2) is None


def test_lp_on_crown_and_odd_cycle():
    c5 = Graph(range(5), [(i, (i + 1) % 5) for i in range(5)])
    assert set(lp_half_integral(c5).value.values()) == {HALF}
    a = lp_half_integral(crown_graph(3))
    assert a.lp_value == 3 and a.is_feasible(crown_graph(3))


def test_half_integrality_sandwich_and_exactness():
    rng = random.Random(21)
    for _ in range(150):
        g = gnp(rng, rng.randint(1, 8), rng.choice([0.2, 0.4, 0.6]))
        a = lp_half_integral(g)
        assert a.is_feasible(g)
        opt = min_vertex_cover(g)
        assert a.lp_value <= opt <= 2 * a.lp_value
        cover = vc_above_lp(g, opt)
        assert len(cover) == opt and is_vertex_cover(g, cover)
        if opt:
            assert vc_above_lp(g, opt - 1) is None


def test_search_counts_nodes():
    stats = SearchStats()
    vc_above_lp(crown_graph(4), 4, stats)
    assert stats.nodes >= 1


def test_local_search_example():
    g, seed = local_search_vc_example()
    assert len(seed) == 5
    better = ls_vertex_cover(g, seed, 3)
    assert len(better) == 4 and is_vertex_cover(g, better)
    assert exchange_distance(seed, better) <= 3
    assert is_vertex_cover(g, LOCAL_SEARCH_VC_IMPROVED)


def test_local_search_matches_oracle():
    rng = random.Random(4)
    for _ in range(120):
        g = gnp(rng, rng.randint(2, 7), 0.4)
        seed = frozenset(v for v in g.vertices if rng.random() < 0.8) | {u for u, v in g.edges()}
        for k in range(0, 4):
            res = ls_vertex_cover(g, seed, k)
            assert (res is not None) == vc_local_improvement_exists(g, seed, k)
            if res is not None:
                assert is_vertex_cover(g, res) and len(res) < len(seed) and exchange_distance(seed, res) <= k


def test_local_search_rejects_non_cover():
    g = Graph(range(2), [(0, 1)])
    with pytest.raises(InvalidSolutionError):
        ls_vertex_cover(g, set(), 2)

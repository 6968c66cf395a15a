import random

import pytest

from graphmod.coloring import (
    ListColoringInstance,
    disagreements,
    greedy_coloring,
    ilc_color_graph,
    ilc_solve,
    is_proper_list_coloring,
)
from graphmod.fixtures import crown_graph
from graphmod.graph import Graph
from graphmod.oracles import chromatic_number, ilc_feasible, list_colorings
from graphmod.stats import SearchStats

from conftest import gnp


def random_ilc_instance(rng: random.Random, n: int, k: int, c: int):
    """A graph, lists of size <= k, a proper coloring of all vertices but one, and budget c."""
    while True:
        g = gnp(rng, n, 0.45)
        palette = range(k + 1)
        lists = {v: frozenset(rng.sample(palette, rng.randint(1, k))) for v in g.vertices}
        target = rng.choice(g.vertices)
        rest = g.remove_vertices([target])
        options = list(list_colorings(rest, lists))
        if options:
            return ListColoringInstance(g, lists, rng.choice(options), target, c)


def test_instance_validation():
    g = Graph(range(2), [(0, 1)])
    lists = {0: frozenset({1}), 1: frozenset({1, 2})}
    with pytest.raises(ValueError):
        ListColoringInstance(g, lists, {0: 2}, 1, 1)
    with pytest.raises(ValueError):
        ListColoringInstance(g, lists, {0: 1, 1: 1}, 1, 1)
    with pytest.raises(ValueError):
        ListColoringInstance(g, lists, {0: 1}, 1, -1)


def test_ilc_agrees_with_oracle_and_respects_bound():
    rng = random.Random(17)
    for _ in range(120):
        inst = random_ilc_instance(rng, rng.randint(2, 6), rng.randint(1, 3), rng.randint(0, 3))
        stats = SearchStats()
        res = ilc_solve(inst, stats)
        assert stats.nodes <= inst.node_bound()
        assert (res is not None) == ilc_feasible(inst.graph, inst.lists, inst.coloring, inst.c)
        if res is not None:
            assert is_proper_list_coloring(inst.graph, inst.lists, res)
            assert disagreements(inst.coloring, res) <= inst.c


def test_target_is_not_a_disagreement():
    g = Graph(range(2), [(0, 1)])
    lists = {0: frozenset({1, 2}), 1: frozenset({1})}
    inst = ListColoringInstance(g, lists, {0: 1}, 1, 1)
    assert ilc_solve(inst) == {0: 2, 1: 1}
    assert ilc_solve(ListColoringInstance(g, lists, {0: 1}, 1, 0)) is None


def test_zero_budget_equals_greedy():
    rng = random.Random(3)
    for _ in range(100):
        g = gnp(rng, rng.randint(0, 9), 0.4)
        lists = {v: frozenset(range(g.max_degree() + 1)) for v in g.vertices}
        assert ilc_color_graph(g, lists, 0) == greedy_coloring(g, lists)


def test_crown_separates_ilc_from_greedy():
    g = crown_graph(3)
    lists = {v: frozenset(range(g.max_degree() + 1)) for v in g.vertices}
    greedy = greedy_coloring(g, lists)
    ilc = ilc_color_graph(g, lists, 2)
    assert len(set(greedy.values())) == 3
    assert len(set(ilc.values())) == 2 == chromatic_number(g)
    assert is_proper_list_coloring(g, lists, ilc)


def test_ilc_never_uses_more_colors():
    rng = random.Random(9)
    for _ in range(100):
        g = gnp(rng, rng.randint(1, 10), 0.35)
        lists = {v: frozenset(range(g.max_degree() + 1)) for v in g.vertices}
        greedy = greedy_coloring(g, lists)
        for global_budget in (False, True):
            col = ilc_color_graph(g, lists, 2, global_budget=global_budget)
            assert is_proper_list_coloring(g, lists, col)
            assert len(set(col.values())) <= len(set(greedy.values()))


def test_empty_graph():
    assert ilc_color_graph(Graph(), {}, 2) == {}

import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphmod.anonymity import (
    IncrementPlan,
    anon_exact,
    anonymize_degree_sequence,
    certify_optimal,
    insertion_lower_bound,
    is_anonymous_sequence,
    is_l_anonymous,
    lt_heuristic,
    realize_increments,
    win_win_certificate,
)
from graphmod.errors import ResourceLimitError
from graphmod.fixtures import ANONYMITY_EXAMPLE_SOLUTION, anonymity_example
from graphmod.graph import Graph
from graphmod.oracles import anon_insertions, consecutive_groupings

from conftest import gnp


def test_example():
    g = anonymity_example()
    assert not is_l_anonymous(g, 2)
    es = lt_heuristic(g, 2)
    assert es.size == 1 and not es.deletions
    assert is_l_anonymous(es.apply(g), 2)
    assert anon_exact(g, 2, 1).size == 1
    assert anon_exact(g, 2, 0) is None
    # the other cost-1 edge works just as well
    assert is_l_anonymous(g.add_edges(ANONYMITY_EXAMPLE_SOLUTION), 2)


def test_example_degree_sequence():
    degrees = [d for _, d in sorted(anonymity_example().degrees().items())]
    assert degrees == [1, 1, 3, 2, 2, 1]
    targets, cost = anonymize_degree_sequence(degrees, 2)
    # cost counts degree increase, so one inserted edge costs 2
    assert cost == 2
    assert sorted(targets, reverse=True) == [3, 3, 2, 2, 1, 1]
    assert all(t >= d for t, d in zip(targets, degrees))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=2, max_size=8), st.sampled_from([2, 3]))
def test_dp_matches_grouping_search(degrees, ell):
    if ell > len(degrees):
        return
    targets, cost = anonymize_degree_sequence(degrees, ell)
    assert cost == consecutive_groupings(sorted(degrees, reverse=True), ell)
    assert is_anonymous_sequence(targets, ell)
    assert sum(t - d for t, d in zip(targets, degrees)) == cost


def test_dp_accepts_mappings():
    targets, cost = anonymize_degree_sequence({10: 1, 20: 2, 30: 2}, 3)
    assert targets == {10: 2, 20: 2, 30: 2} and cost == 1


def test_dp_rejects_bad_ell():
    with pytest.raises(ValueError):
        anonymize_degree_sequence([1, 2], 3)
    with pytest.raises(ValueError):
        anonymize_degree_sequence([1, 2], 0)


def test_heuristic_always_valid_and_exact_matches_oracle():
    rng = random.Random(8)
    for _ in range(150):
        n = rng.randint(2, 7)
        g = gnp(rng, n, rng.choice([0.2, 0.4, 0.6]))
        ell = rng.choice([2, 3]) if n >= 3 else 2
        es = lt_heuristic(g, ell)
        assert not es.deletions
        assert is_l_anonymous(es.apply(g), ell)
        opt = anon_insertions(g, ell)
        assert es.size >= opt >= insertion_lower_bound(g, ell)
        if n <= 6:
            assert anon_exact(g, ell, opt).size == opt


def test_realize_increments():
    g = Graph(range(4))
    edges = realize_increments(g, IncrementPlan({0: 1, 1: 1, 2: 2, 3: 2}))
    h = g.add_edges(edges)
    assert [h.degree(v) for v in range(4)] == [1, 1, 2, 2]
    assert realize_increments(g, {0: 1}) is None  # odd total
    assert realize_increments(Graph.complete(range(3)), {0: 1, 1: 1}) is None


def test_win_win():
    assert win_win_certificate(1, 3)
    assert not win_win_certificate(2, 32)
    assert win_win_certificate(2, 33)
    # a small graph never has a lower bound that large
    assert not certify_optimal(anonymity_example(), 2)


def test_exact_cap():
    g = Graph(range(12))
    with pytest.raises(ResourceLimitError):
        anon_exact(g, 2, 10, max_candidates=1000)


def test_already_anonymous_costs_nothing():
    g = Graph(range(4), [(0, 1), (2, 3)])
    assert lt_heuristic(g, 2).size == 0
    assert Counter(g.degrees().values()) == {1: 4}

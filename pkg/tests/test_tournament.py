import random

import pytest

from graphmod.errors import InvalidSolutionError, ResourceLimitError
from graphmod.oracles import fas_arc_subset, fas_local_improvement_exists
from graphmod.tournament import Tournament, backward_arcs, fas_exact, is_acyclic_after, ls_fast


def redundant_seed(t: Tournament, rng: random.Random, extra: int) -> frozenset:
    order = list(range(t.n))
    rng.shuffle(order)
    seed = set(backward_arcs(t, order))
    forward = sorted(t.arcs - seed)
    seed.update(rng.sample(forward, min(extra, len(forward))))
    return frozenset(seed)


def test_tournament_validation():
    with pytest.raises(ValueError):
        Tournament(3, frozenset({(0, 1), (1, 2)}))
    with pytest.raises(ValueError):
        Tournament(2, frozenset({(0, 1), (1, 0)}))
    t = Tournament.from_order([2, 0, 1])
    assert (2, 0) in t.arcs and is_acyclic_after(t, ())


def test_fas_exact_matches_arc_subsets():
    rng = random.Random(1)
    for _ in range(25):
        t = Tournament.random(rng.randint(3, 6), rng)
        s = fas_exact(t)
        assert is_acyclic_after(t, s)
        assert len(s) == fas_arc_subset(t.n, t.arcs)


def test_fas_exact_cap():
    with pytest.raises(ResourceLimitError):
        fas_exact(Tournament.random(10, random.Random(0)), max_n=9)


def test_cyclic_triangle():
    t = Tournament(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    res = ls_fast(t, {(0, 1), (1, 2)}, 3)
    assert len(res) == 1 and is_acyclic_after(t, res)
    assert ls_fast(t, {(0, 1)}, 3) is None


def test_local_search_matches_oracle():
    rng = random.Random(2)
    for _ in range(30):
        t = Tournament.random(rng.choice([5, 6]), rng)
        seed = redundant_seed(t, rng, rng.randint(0, 3))
        for k in (1, 2, 3):
            res = ls_fast(t, seed, k)
            assert (res is not None) == fas_local_improvement_exists(t.n, t.arcs, seed, k)
            if res is not None:
                assert is_acyclic_after(t, res) and len(res) < len(seed) and len(res ^ seed) <= k


def test_local_search_rejects_bad_seed():
    t = Tournament(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    with pytest.raises(InvalidSolutionError):
        ls_fast(t, set(), 2)
    with pytest.raises(ValueError):
        ls_fast(t, {(1, 0)}, 2)

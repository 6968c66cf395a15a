import json

import pytest

from graphmod.cluster_editing import CeConfig
from graphmod.graph import Graph
from graphmod.tuner import enumerate_configs, random_corpus, tune


def test_default_grid_has_24_configs_in_fixed_order():
    configs = enumerate_configs()
    assert len(configs) == 24
    assert len(set(configs)) == 24
    assert configs[0] == CeConfig("none", "none", 1, "min_id")
    assert configs[-1] == CeConfig("p3_packing", "critical_clique", 4, "max_conflict")


def test_grid_errors():
    with pytest.raises(ValueError):
        enumerate_configs({"lower_bound": []})
    with pytest.raises(ValueError):
        enumerate_configs({"colour": [1]})


def test_report_is_deterministic_and_consistent():
    corpus = random_corpus(6, seed=3)
    grid = {"reduction_period": [1, 2]}
    a = tune(corpus, grid, seed=1)
    b = tune(corpus, grid, seed=1)
    assert a.to_json() == b.to_json()
    assert a.consistent()
    data = json.loads(a.to_json())
    assert data["winner"]["index"] == a.winner_index
    assert "wall_time" not in data["runs"][0]
    assert "wall_time" in json.loads(a.to_json(include_timing=True))["runs"][0]


def test_timeouts_are_charged_the_budget():
    corpus = [("dense", Graph(range(7), [(u, v) for u in range(7) for v in range(u + 1, 7) if (u + v) % 3]))]
    report = tune(corpus, {"lower_bound": ["none"], "reduction": ["none"], "reduction_period": [1], "branch_order": ["min_id"]}, node_limit=3)
    run = report.runs[0]
    assert run.timeout and run.nodes == 3 and run.cost is None


def test_ties_go_to_the_first_config():
    corpus = [Graph.complete(range(3))]
    report = tune(corpus, {"lower_bound": ["none", "p3_packing"], "reduction": ["none"], "reduction_period": [1], "branch_order": ["min_id"]})
    assert report.totals()[0] == report.totals()[1]
    assert report.winner_index == 0


def test_fingerprint_depends_on_corpus():
    g = tune(random_corpus(2, seed=1), {"reduction_period": [1]}).corpus_fingerprint
    h = tune(random_corpus(2, seed=2), {"reduction_period": [1]}).corpus_fingerprint
    assert g != h


def test_empty_corpus_rejected():
    with pytest.raises(ValueError):
        tune([])

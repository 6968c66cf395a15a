"""Grid-search configuration of the Cluster Editing solver over a training corpus.

The cost of a run is the number of search-tree nodes it visits, which does
not depend on the machine. Wall time is collected but kept out of the
serialized report unless asked for, so reports are reproducible byte for byte.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cluster_editing import BRANCH_ORDERS, LOWER_BOUNDS, REDUCTIONS, CeConfig, ce_solve
from .graph import Graph
from .stats import DeadlineExceeded, NodeLimitExceeded, SearchStats

GRID_KEYS = ("lower_bound", "reduction", "reduction_period", "branch_order")

DEFAULT_GRID = {
    "lower_bound": list(LOWER_BOUNDS),
    "reduction": list(REDUCTIONS),
    "reduction_period": [1, 2, 4],
    "branch_order": list(BRANCH_ORDERS),
}


def enumerate_configs(grid: Mapping[str, Sequence] | None = None, seed: int = 0) -> list[CeConfig]:
    """Cartesian product of the grid in a fixed dimension order."""
    grid = DEFAULT_GRID if grid is None else grid
    unknown = set(grid) - set(GRID_KEYS)
    if unknown:
        raise ValueError(f"unknown grid dimensions: {sorted(unknown)}")
    axes = []
    for key in GRID_KEYS:
        values = list(grid.get(key, DEFAULT_GRID[key]))
        if not values:
            raise ValueError(f"grid dimension {key!r} is empty")
        axes.append(values)
    return [CeConfig(*combo, seed=seed) for combo in itertools.product(*axes)]


def corpus_fingerprint(corpus: Sequence[tuple[str, Graph]]) -> str:
    h = hashlib.sha256()
    for name, g in corpus:
        h.update(name.encode())
        h.update(b"\0")
        h.update(repr((g.vertices, g.edges())).encode())
        h.update(b"\0")
    return h.hexdigest()


def file_fingerprint(paths: Iterable) -> str:
    h = hashlib.sha256()
    for p in paths:
        with open(p, "rb") as fh:
            h.update(hashlib.sha256(fh.read()).digest())
    return h.hexdigest()


@dataclass
class TuneRun:
    config: int
    instance: str
    nodes: int
    cost: int | None
    timeout: bool
    wall_time: float = 0.0


@dataclass
class TuneReport:
    grid: dict
    configs: list[CeConfig]
    seed: int
    corpus_fingerprint: str
    node_limit: int | None
    runs: list[TuneRun] = field(default_factory=list)

    def totals(self) -> list[int]:
        out = [0] * len(self.configs)
        for r in self.runs:
            out[r.config] += r.nodes
        return out

    @property
    def winner_index(self) -> int:
        totals = self.totals()
        return min(range(len(totals)), key=lambda i: (totals[i], i))

    @property
    def winner(self) -> CeConfig:
        return self.configs[self.winner_index]

    def consistent(self) -> bool:
        """Every finished run on an instance reports the same optimum."""
        answers: dict[str, set] = {}
        for r in self.runs:
            if not r.timeout:
                answers.setdefault(r.instance, set()).add(r.cost)
        return all(len(a) == 1 for a in answers.values())

    def to_dict(self, include_timing: bool = False) -> dict:
        runs = []
        for r in self.runs:
            rec = {"config": r.config, "instance": r.instance, "nodes": r.nodes, "cost": r.cost, "timeout": r.timeout}
            if include_timing:
                rec["wall_time"] = r.wall_time
            runs.append(rec)
        return {
            "schema_version": 1,
            "grid": self.grid,
            "seed": self.seed,
            "corpus_fingerprint": self.corpus_fingerprint,
            "node_limit": self.node_limit,
            "configs": [c.to_dict() for c in self.configs],
            "runs": runs,
            "totals": self.totals(),
            "consistent": self.consistent(),
            "winner": {"index": self.winner_index, "config": self.winner.to_dict()},
        }

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)


def random_corpus(count: int, n: int = 7, p: float = 0.6, seed: int = 0) -> list[tuple[str, Graph]]:
    """Erdos-Renyi training graphs; the defaults give dense instances with many conflicts."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        out.append((f"gnp-{n}-{i:04d}", Graph(range(n), edges)))
    return out


def _named(corpus) -> list[tuple[str, Graph]]:
    out = []
    for i, item in enumerate(corpus):
        if isinstance(item, Graph):
            out.append((f"instance-{i:04d}", item))
        else:
            name, g = item
            out.append((str(name), g))
    return out


def tune(
    corpus,
    grid: Mapping[str, Sequence] | None = None,
    node_limit: int | None = 200_000,
    seed: int = 0,
    time_limit: float | None = None,
    fingerprint: str | None = None,
) -> TuneReport:
    """Run every configuration on every instance and pick the cheapest in total nodes.

    `corpus` holds graphs or ``(name, graph)`` pairs. A run that hits
    `node_limit` (or the optional wall-clock `time_limit`) is a timeout and is
    charged the full node limit. Ties go to the earlier configuration.
    """
    named = _named(corpus)
    if not named:
        raise ValueError("corpus is empty")
    grid = {k: list(v) for k, v in (DEFAULT_GRID if grid is None else grid).items()}
    configs = enumerate_configs(grid, seed)
    report = TuneReport(
        grid=grid,
        configs=configs,
        seed=seed,
        corpus_fingerprint=fingerprint or corpus_fingerprint(named),
        node_limit=node_limit,
    )
    for ci, cfg in enumerate(configs):
        for name, g in named:
            stats = SearchStats.with_timeout(time_limit, node_limit)
            start = time.perf_counter()
            try:
                res = ce_solve(g, g.m, cfg, stats)
                cost, timeout, nodes = (res.size if res is not None else None), False, stats.nodes
            except (NodeLimitExceeded, DeadlineExceeded):
                cost, timeout = None, True
                nodes = node_limit if node_limit is not None else stats.nodes
            report.runs.append(TuneRun(ci, name, nodes, cost, timeout, time.perf_counter() - start))
    return report

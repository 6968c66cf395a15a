"""Incremental List Coloring and a coloring heuristic built on it.

The incremental search colors one new vertex and repairs the conflicts it
causes by recoloring neighbours, spending one unit of the budget per
recolored vertex. With at most k colors per list and budget c the search tree
has at most 1 + k + ... + k^c nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import Graph
from .stats import SearchStats

Coloring = dict[int, int]


@dataclass(frozen=True)
class ListColoringInstance:
    graph: Graph
    lists: Mapping[int, frozenset[int]]
    coloring: Mapping[int, int]
    target: int
    c: int

    def __post_init__(self):
        missing = set(self.graph.vertices) - set(self.coloring) - {self.target}
        if missing:
            raise ValueError(f"vertices without a color: {sorted(missing)}")
        if self.target in self.coloring:
            raise ValueError("the target vertex must be uncolored")
        for v, x in self.coloring.items():
            if x not in self.lists[v]:
                raise ValueError(f"vertex {v} has color {x} outside its list")
        for u, v in self.graph.edges():
            if u in self.coloring and v in self.coloring and self.coloring[u] == self.coloring[v]:
                raise ValueError(f"coloring is not proper on edge ({u}, {v})")
        if self.c < 0:
            raise ValueError("budget c must be non-negative")

    @property
    def k(self) -> int:
        return max((len(self.lists[v]) for v in self.graph.vertices), default=0)

    def node_bound(self) -> int:
        return sum(self.k ** i for i in range(self.c + 1))


def is_proper_list_coloring(g: Graph, lists: Mapping[int, frozenset[int]], coloring: Mapping[int, int]) -> bool:
    if set(coloring) != set(g.vertices):
        return False
    if any(coloring[v] not in lists[v] for v in g.vertices):
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges())


def disagreements(old: Mapping[int, int], new: Mapping[int, int]) -> int:
    return sum(1 for v, x in old.items() if new.get(v) != x)


def ilc_solve(inst: ListColoringInstance, stats: SearchStats | None = None) -> Coloring | None:
    """Proper list coloring of all vertices differing from the old one on at most c vertices.

    The target itself does not count as a disagreement. Conflicted neighbours
    are queued in ascending id order; colors are tried in ascending order.
    """
    stats = stats if stats is not None else SearchStats()
    g, lists = inst.graph, inst.lists

    def node(col: Coloring, pending: list[int], budget: int):
        stats.tick()
        p, rest = pending[0], pending[1:]
        for x in sorted(lists[p]):
            conflicts = sorted(w for w in g.neighbors(p) if col.get(w) == x)
            if len(conflicts) > budget:
                continue
            new = dict(col)
            new[p] = x
            for w in conflicts:
                del new[w]
            queue = rest + conflicts
            if not queue:
                return new
            found = node(new, queue, budget - len(conflicts))
            if found is not None:
                return found
        return None

    return node(dict(inst.coloring), [inst.target], inst.c)


def _insertion_order(g: Graph) -> list[int]:
    return sorted(g.vertices, key=lambda v: (-g.degree(v), v))


def _free_color(g: Graph, lists, col: Coloring, v: int):
    taken = {col[w] for w in g.neighbors(v) if w in col}
    return min((x for x in lists[v] if x not in taken), default=None)


def greedy_coloring(g: Graph, lists: Mapping[int, frozenset[int]]) -> Coloring | None:
    """Baseline: descending-degree order, smallest free list color."""
    col: Coloring = {}
    for v in _insertion_order(g):
        x = _free_color(g, lists, col, v)
        if x is None:
            return None
        col[v] = x
    return col


def ilc_color_graph(
    g: Graph,
    lists: Mapping[int, frozenset[int]],
    c: int,
    global_budget: bool = False,
    stats: SearchStats | None = None,
) -> Coloring | None:
    """Insert vertices in descending-degree order, recoloring to avoid opening new colors.

    When the smallest free color of the new vertex is already in use it is
    taken directly. Otherwise an incremental search with lists cut down to the
    colors in use (budget c) gets a chance first; if it fails the free color
    is opened, and if there is none the search runs on the full lists.
    With ``global_budget`` the c recolorings are shared by all insertions.
    """
    col: Coloring = {}
    remaining = c
    for v in _insertion_order(g):
        budget = remaining if global_budget else c
        free = _free_color(g, lists, col, v)
        used = set(col.values())
        if free is not None and free in used:
            col[v] = free
            continue
        h = g.induced(set(col) | {v})
        result = None
        if budget > 0 and used:
            restricted = {u: frozenset(lists[u]) & used for u in h.vertices}
            result = ilc_solve(ListColoringInstance(h, restricted, col, v, budget), stats)
        if result is None and free is None and budget > 0:
            full = {u: frozenset(lists[u]) for u in h.vertices}
            result = ilc_solve(ListColoringInstance(h, full, col, v, budget), stats)
        if result is None:
            if free is None:
                return None
            col[v] = free
            continue
        if global_budget:
            remaining -= disagreements(col, result)
        col = result
    return col

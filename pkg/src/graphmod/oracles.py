"""Exhaustive reference solvers for small instances.

These deliberately share no search code with the solvers they check; they
only use the graph container and direct predicate evaluation.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Mapping, Sequence

from .graph import Graph


def set_partitions(items: Sequence) -> Iterable[list[list]]:
    """All partitions of `items` (restricted-growth enumeration)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _components(vertices, edges) -> list[set]:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    groups: dict = {}
    for v in vertices:
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def _hc_by_degree(vertices: set, edges) -> bool:
    # every vertex has degree > n/2, equivalent to edge connectivity > n/2
    n = len(vertices)
    if n == 1:
        return True
    deg = Counter()
    for u, v in edges:
        if u in vertices and v in vertices:
            deg[u] += 1
            deg[v] += 1
    return all(2 * deg[v] > n for v in vertices)


def brute_min_cut(g: Graph, component: Iterable[int]) -> int:
    comp = sorted(component)
    first, rest = comp[0], comp[1:]
    best = None
    for r in range(0, len(rest)):
        for extra in itertools.combinations(rest, r):
            side = {first, *extra}
            c = sum(1 for u in side for w in g.neighbors(u) if w in comp and w not in side)
            best = c if best is None else min(best, c)
    return best


def hcd_edge_subset(g: Graph, k: int | None = None) -> int | None:
    """Fewest edge deletions leaving only highly connected components (exhaustive over subsets)."""
    edges = g.edges()
    top = len(edges) if k is None else min(k, len(edges))
    for size in range(top + 1):
        for removed in itertools.combinations(range(len(edges)), size):
            gone = set(removed)
            kept = [e for i, e in enumerate(edges) if i not in gone]
            if all(_hc_by_degree(c, kept) for c in _components(g.vertices, kept)):
                return size
    return None


def hcd_partition(g: Graph) -> int:
    """Same optimum, enumerating vertex partitions into highly connected induced parts."""
    edges = g.edges()
    best = None
    for part in set_partitions(list(g.vertices)):
        owner = {v: i for i, block in enumerate(part) for v in block}
        if not all(_hc_by_degree(set(block), edges) for block in part):
            continue
        cost = sum(1 for u, v in edges if owner[u] != owner[v])
        best = cost if best is None else min(best, cost)
    return best


def consecutive_groupings(sorted_desc: Sequence[int], ell: int) -> int | None:
    """Cheapest split of a descending sequence into consecutive blocks of size >= ell, each raised to its max."""
    n = len(sorted_desc)
    best = None

    def rec(start, acc):
        nonlocal best
        if start == n:
            best = acc if best is None else min(best, acc)
            return
        for end in range(start + ell, n + 1):
            block = sorted_desc[start:end]
            rec(end, acc + sum(block[0] - x for x in block))

    rec(0, 0)
    return best


def anonymous_targets(degrees: Sequence[int], ell: int, top: int) -> int | None:
    """Cheapest pointwise raise (targets <= top) whose multiset is ell-anonymous."""
    best = None
    for targets in itertools.product(*[range(d, top + 1) for d in degrees]):
        if all(c >= ell for c in Counter(targets).values()):
            cost = sum(t - d for t, d in zip(targets, degrees))
            best = cost if best is None else min(best, cost)
    return best


def anon_insertions(g: Graph, ell: int) -> int:
    """Fewest inserted edges making `g` ell-anonymous."""
    slots = g.non_edges()
    base = g.degrees()
    for size in range(len(slots) + 1):
        for chosen in itertools.combinations(slots, size):
            deg = Counter(base)
            for u, v in chosen:
                deg[u] += 1
                deg[v] += 1
            if all(c >= ell for c in Counter(deg[v] for v in g.vertices).values()):
                return size
    raise AssertionError("the complete graph is always anonymous")


def min_vertex_cover(g: Graph) -> int:
    edges = g.edges()
    vs = list(g.vertices)
    for size in range(len(vs) + 1):
        for cand in itertools.combinations(vs, size):
            s = set(cand)
            if all(u in s or v in s for u, v in edges):
                return size
    return len(vs)


def all_vertex_covers(g: Graph) -> list[frozenset[int]]:
    edges = g.edges()
    vs = list(g.vertices)
    out = []
    for mask in range(1 << len(vs)):
        s = {vs[i] for i in range(len(vs)) if mask >> i & 1}
        if all(u in s or v in s for u, v in edges):
            out.append(frozenset(s))
    return out


def vc_local_improvement_exists(g: Graph, s: frozenset[int], k: int) -> bool:
    return any(len(c) < len(s) and len(c ^ s) <= k for c in all_vertex_covers(g))


def _is_dag(n: int, arcs) -> bool:
    # repeatedly strip sinks
    alive = set(range(n))
    arcs = set(arcs)
    while alive:
        sink = next((v for v in alive if not any(a[0] == v and a[1] in alive for a in arcs)), None)
        if sink is None:
            return False
        alive.remove(sink)
    return True


def fas_arc_subset(n: int, arcs: frozenset) -> int:
    ordered = sorted(arcs)
    for size in range(len(ordered) + 1):
        for removed in itertools.combinations(ordered, size):
            if _is_dag(n, arcs - set(removed)):
                return size
    return len(ordered)


def fas_local_improvement_exists(n: int, arcs: frozenset, s: frozenset, k: int) -> bool:
    """Is there S' with |S'| < |S|, |S ^ S'| <= k, and arcs - S' acyclic?"""
    ordered = sorted(arcs)
    for size in range(1, k + 1):
        for flip in itertools.combinations(ordered, size):
            cand = s.symmetric_difference(flip)
            if len(cand) < len(s) and _is_dag(n, arcs - cand):
                return True
    return False


def list_colorings(g: Graph, lists: Mapping[int, Iterable[int]]) -> Iterable[dict[int, int]]:
    vs = list(g.vertices)
    edges = g.edges()
    for combo in itertools.product(*[sorted(lists[v]) for v in vs]):
        col = dict(zip(vs, combo))
        if all(col[u] != col[v] for u, v in edges):
            yield col


def ilc_feasible(g: Graph, lists, old: Mapping[int, int], c: int) -> bool:
    return any(sum(1 for v, x in old.items() if col[v] != x) <= c for col in list_colorings(g, lists))


def chromatic_number(g: Graph) -> int:
    for q in range(1, g.n + 1):
        if next(iter(list_colorings(g, {v: range(q) for v in g.vertices})), None) is not None:
            return q
    return 0


def cluster_editing(g: Graph) -> int:
    """Fewest edge edits to a disjoint union of cliques, over all vertex partitions."""
    edges = set(g.edges())
    vs = list(g.vertices)
    best = None
    for part in set_partitions(vs):
        owner = {v: i for i, block in enumerate(part) for v in block}
        cost = 0
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                same = owner[u] == owner[v]
                if same != ((u, v) in edges):
                    cost += 1
        best = cost if best is None else min(best, cost)
    return best


def weighted_cluster_editing(groups_count: int, cost_of) -> int:
    """Minimum of ``cost_of(labels)`` over all partitions of range(groups_count)."""
    best = None
    for part in set_partitions(list(range(groups_count))):
        labels = [0] * groups_count
        for i, block in enumerate(part):
            for x in block:
                labels[x] = i
        c = cost_of(labels)
        best = c if best is None else min(best, c)
    return best

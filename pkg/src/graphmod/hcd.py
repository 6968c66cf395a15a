"""Highly Connected Deletion: the min-cut clustering heuristic and an exact solver.

A solution deletes edges until every connected component is highly connected.
Any optimal solution is a partition of the vertex set into parts that each
induce a highly connected subgraph, paying for every edge between parts; the
exact solver searches over such partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ResourceLimitError
from .graph import (
    Edge,
    Graph,
    Partition,
    TieBreakPolicy,
    connected_components,
    deletion_set_for,
    edge,
    edge_connectivity,
    is_highly_connected,
    min_cut,
)
from .stats import SearchStats


@dataclass(frozen=True)
class HcdSolution:
    deleted: frozenset[Edge]
    clusters: Partition

    @property
    def cost(self) -> int:
        return len(self.deleted)


@dataclass(frozen=True)
class AdversarialInstance:
    """Two n-cliques joined by a matching that misses the first pair."""

    n: int
    graph: Graph

    @property
    def optimal_cost(self) -> int:
        return self.n - 1

    @property
    def adversarial_heuristic_cost(self) -> int:
        return self.n * (self.n + 1) // 2 - 1


def gen_adversarial(n: int) -> AdversarialInstance:
    """Cliques on u_1..u_n (ids 0..n-1) and v_1..v_n (ids n..2n-1) plus {u_i, v_i} for i >= 2."""
    if n < 2:
        raise ValueError("adversarial instance needs n >= 2")
    us = list(range(n))
    vs = list(range(n, 2 * n))
    edges = [(a, b) for side in (us, vs) for i, a in enumerate(side) for b in side[i + 1:]]
    edges += [(us[i], vs[i]) for i in range(1, n)]
    return AdversarialInstance(n, Graph(us + vs, edges))


def validate_hcd(g: Graph, solution: HcdSolution) -> bool:
    """Deleting the edge set leaves exactly the claimed clusters, all highly connected."""
    if not all(g.has_edge(*e) for e in solution.deleted):
        return False
    h = g.remove_edges(solution.deleted)
    comps = set(connected_components(h))
    if comps != set(solution.clusters.clusters):
        return False
    return all(is_highly_connected(h, c) for c in comps)


def hs_cluster(g: Graph, policy: TieBreakPolicy = TieBreakPolicy()) -> HcdSolution:
    """Repeatedly delete a minimum cut inside a component that is not yet highly connected.

    The smaller side of each cut is processed first.
    """
    h = g
    deleted: set[Edge] = set()
    clusters = []
    stack = list(reversed(connected_components(g)))
    while stack:
        comp = stack.pop()
        if is_highly_connected(h, comp):
            clusters.append(comp)
            continue
        cut = min_cut(h, comp, policy)
        deleted |= cut.crossing
        h = h.remove_edges(cut.crossing)
        parts = connected_components(h, cut.side_a) + connected_components(h, cut.side_b)
        parts.sort(key=lambda c: (len(c), min(c)))
        stack.extend(reversed(parts))
    return HcdSolution(frozenset(deleted), Partition(tuple(clusters)))


def hcd_lower_bound(g: Graph) -> int:
    """Sum of edge connectivities of the components that are not highly connected."""
    return sum(edge_connectivity(g, c) for c in connected_components(g) if not is_highly_connected(g, c))


class HcdReduction(NamedTuple):
    reduced: Graph
    forced: frozenset[Edge]
    residual_k: int


def hcd_reduce(g: Graph, k: int) -> HcdReduction | None:
    """Exhaustively apply the sound reduction rules; ``None`` means no solution of size <= k.

    * a vertex of degree one cannot share a highly connected part with anyone,
      so its edge is deleted;
    * components that are already highly connected are removed;
    * a remaining component whose edge connectivity exceeds the budget, or a
      total connectivity bound above it, makes the instance infeasible.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    h = g
    forced: set[Edge] = set()
    while True:
        pendant = [(v, next(iter(h.neighbors(v)))) for v in h.vertices if h.degree(v) == 1]
        if pendant:
            drop = {edge(u, w) for u, w in pendant}
            forced |= drop
            h = h.remove_edges(drop)
            continue
        keep = [c for c in connected_components(h) if not is_highly_connected(h, c)]
        h = h.induced(set().union(*keep)) if keep else Graph()
        break
    residual = k - len(forced)
    if residual < 0:
        return None
    bounds = [edge_connectivity(h, c) for c in connected_components(h)]
    if any(b > residual for b in bounds) or sum(bounds) > residual:
        return None
    return HcdReduction(h, frozenset(forced), residual)


class _Search:
    # Bitmask state: a set of vertices S maps to the cheapest way of splitting G[S]
    # into highly connected induced parts.

    def __init__(self, g: Graph, stats: SearchStats):
        self.order = list(g.vertices)
        index = {v: i for i, v in enumerate(self.order)}
        self.adj = [0] * len(self.order)
        for u, v in g.edges():
            self.adj[index[u]] |= 1 << index[v]
            self.adj[index[v]] |= 1 << index[u]
        self.g = g
        self.stats = stats
        self.memo: dict[int, tuple] = {}

    def bits(self, s: int) -> list[int]:
        out = []
        while s:
            low = s & -s
            out.append(low.bit_length() - 1)
            s ^= low
        return out

    def hc(self, s: int) -> bool:
        size = s.bit_count()
        if size <= 1:
            return True
        # degree characterization: min degree > size/2 iff highly connected
        return all(2 * (self.adj[i] & s).bit_count() > size for i in self.bits(s))

    def components(self, s: int) -> list[int]:
        out = []
        while s:
            seed = s & -s
            comp, frontier = seed, seed
            while frontier:
                nxt = 0
                for i in self.bits(frontier):
                    nxt |= self.adj[i]
                nxt &= s & ~comp
                comp |= nxt
                frontier = nxt
            out.append(comp)
            s &= ~comp
        return out

    def cut_size(self, a: int, s: int) -> int:
        rest = s & ~a
        return sum((self.adj[i] & rest).bit_count() for i in self.bits(a))

    def connectivity(self, s: int) -> int:
        return edge_connectivity(self.g, [self.order[i] for i in self.bits(s)])

    def solve_set(self, s: int, budget: int):
        total, parts = 0, []
        for comp in self.components(s):
            res = self.solve(comp, budget - total)
            if res is None:
                return None
            total += res[0]
            parts.extend(res[1])
        return total, parts

    def solve(self, s: int, budget: int):
        """Cheapest split of the connected set `s` costing at most `budget`, else None."""
        if budget < 0:
            return None
        known = self.memo.get(s)
        if known is not None:
            if known[0] == "exact":
                return (known[1], known[2]) if known[1] <= budget else None
            if budget < known[1]:
                return None
        self.stats.tick()
        if self.hc(s):
            self.memo[s] = ("exact", 0, [s])
            return 0, [s]
        if self.connectivity(s) > budget:
            self.memo[s] = ("above", budget + 1)
            return None
        root = s & -s
        reach = root | (self.adj[root.bit_length() - 1] & s)
        for i in self.bits(reach):
            reach |= self.adj[i] & s
        others = reach & ~root
        candidates = []
        sub = others
        while True:
            a = sub | root
            if a != s:
                c = self.cut_size(a, s)
                if c <= budget and self.hc(a):
                    candidates.append((c, self.bits(a), a))
            if sub == 0:
                break
            sub = (sub - 1) & others
        candidates.sort()
        best, bound = None, budget
        for c, _, a in candidates:
            if c > bound:
                break
            rest = self.solve_set(s & ~a, bound - c)
            if rest is None:
                continue
            total = c + rest[0]
            if total <= bound:
                best = (total, [a] + rest[1])
                bound = total - 1
        if best is None:
            self.memo[s] = ("above", budget + 1)
        else:
            self.memo[s] = ("exact", best[0], best[1])
        return best

    def to_vertices(self, s: int) -> frozenset[int]:
        return frozenset(self.order[i] for i in self.bits(s))


def hcd_exact(
    g: Graph, k: int, max_component: int = 20, stats: SearchStats | None = None
) -> HcdSolution | None:
    """Minimum Highly Connected Deletion solution of cost at most `k`, or None.

    Components (after reduction) larger than `max_component` vertices are refused.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = stats if stats is not None else SearchStats()
    red = hcd_reduce(g, k)
    if red is None:
        return None
    reduced, forced, residual = red
    for comp in connected_components(reduced):
        if len(comp) > max_component:
            raise ResourceLimitError(
                f"component with {len(comp)} vertices exceeds the exact-solver cap of {max_component}"
            )
    upper = hs_cluster(reduced, TieBreakPolicy.lexicographic()).cost
    search = _Search(reduced, stats)
    full = (1 << reduced.n) - 1
    res = search.solve_set(full, min(residual, upper))
    if res is None:
        return None
    parts = [search.to_vertices(p) for p in res[1]]
    # components dropped by the reduction are clusters as they stand
    kept = set(reduced.vertices)
    parts += [c for c in connected_components(g.remove_edges(forced)) if not c & kept]
    partition = Partition(tuple(parts))
    deleted = deletion_set_for(g, partition)
    return HcdSolution(frozenset(deleted), partition)

"""Exact Cluster Editing by branch and bound with tunable choice points.

The search branches on an induced path u-v-w: delete uv, or keep uv and
delete vw, or keep both and insert uw. Decided pairs are marked permanent or
forbidden and the marks are closed transitively, so a pair is never edited
twice. Merging twins (critical cliques) is expressed as permanent marks, which
is the unweighted view of contracting them into weighted super-vertices.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple

from .graph import EditSet, Edge, Graph, Partition
from .stats import SearchStats

LOWER_BOUNDS = ("none", "p3_packing")
REDUCTIONS = ("none", "critical_clique")
BRANCH_ORDERS = ("min_id", "max_conflict")


@dataclass(frozen=True)
class CeConfig:
    lower_bound: str = "p3_packing"
    reduction: str = "critical_clique"
    reduction_period: int = 1
    branch_order: str = "min_id"
    seed: int = 0

    def __post_init__(self):
        if self.lower_bound not in LOWER_BOUNDS:
            raise ValueError(f"lower_bound must be one of {LOWER_BOUNDS}")
        if self.reduction not in REDUCTIONS:
            raise ValueError(f"reduction must be one of {REDUCTIONS}")
        if self.branch_order not in BRANCH_ORDERS:
            raise ValueError(f"branch_order must be one of {BRANCH_ORDERS}")
        if int(self.reduction_period) < 1:
            raise ValueError("reduction_period must be >= 1")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "CeConfig":
        return cls(**data)

    def label(self) -> str:
        return f"{self.lower_bound}/{self.reduction}/p{self.reduction_period}/{self.branch_order}"


class ConflictTriple(NamedTuple):
    u: int
    v: int
    w: int


def _triples(adj: list[int], n: int):
    # (u, v, w) with v the center, u < w, uv and vw edges, uw a non-edge
    for v in range(n):
        nb = [i for i in range(n) if adj[v] >> i & 1]
        for a in range(len(nb)):
            u = nb[a]
            for w in nb[a + 1:]:
                if not adj[u] >> w & 1:
                    yield u, v, w


def _pick_triple(adj: list[int], n: int, order: str):
    triples = list(_triples(adj, n))
    if not triples:
        return None

    def key(t):
        u, v, w = t
        return (tuple(sorted(t)), v)

    if order == "min_id":
        return min(triples, key=key)
    count: dict[tuple[int, int], int] = {}
    for u, v, w in triples:
        for e in ((min(u, v), max(u, v)), (min(v, w), max(v, w))):
            count[e] = count.get(e, 0) + 1
    best = None
    for t in triples:
        u, v, w = t
        cu = count[(min(u, v), max(u, v))]
        cw = count[(min(v, w), max(v, w))]
        oriented = t if cu >= cw else (w, v, u)
        score = (-max(cu, cw), key(t))
        if best is None or score < best[0]:
            best = (score, oriented)
    return best[1]


def _packing(adj: list[int], n: int) -> int:
    used: set[tuple[int, int]] = set()
    size = 0
    for u, v, w in _triples(adj, n):
        pairs = ((min(u, v), max(u, v)), (min(v, w), max(v, w)), (u, w))
        if any(p in used for p in pairs):
            continue
        used.update(pairs)
        size += 1
    return size


def _index(g: Graph):
    order = list(g.vertices)
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for u, v in g.edges():
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]
    return order, adj


def find_conflict_triple(g: Graph, order: str = "min_id") -> ConflictTriple | None:
    """An induced path u-v-w (center v), or None when `g` is a disjoint union of cliques."""
    if order not in BRANCH_ORDERS:
        raise ValueError(f"branch order must be one of {BRANCH_ORDERS}")
    ids, adj = _index(g)
    t = _pick_triple(adj, len(ids), order)
    return None if t is None else ConflictTriple(*(ids[i] for i in t))


def is_cluster_graph(g: Graph) -> bool:
    return find_conflict_triple(g) is None


def ce_lower_bound(g: Graph, cfg: CeConfig = CeConfig()) -> int:
    """Greedy packing of induced P3s that share no vertex pair (or 0 with ``lower_bound='none'``)."""
    if cfg.lower_bound == "none":
        return 0
    ids, adj = _index(g)
    return _packing(adj, len(ids))


class _Infeasible(Exception):
    pass


class _State:
    __slots__ = ("n", "adj", "perm", "forb", "cost")

    def __init__(self, n, adj, perm, forb, cost):
        self.n, self.adj, self.perm, self.forb, self.cost = n, adj, perm, forb, cost

    def copy(self) -> "_State":
        return _State(self.n, list(self.adj), list(self.perm), list(self.forb), self.cost)

    def _set(self, ops, limit):
        while ops:
            kind, a, b = ops.pop()
            bit_a, bit_b = 1 << a, 1 << b
            if kind == "perm":
                if self.perm[a] & bit_b:
                    continue
                if self.forb[a] & bit_b:
                    raise _Infeasible
                if not self.adj[a] & bit_b:
                    self.adj[a] |= bit_b
                    self.adj[b] |= bit_a
                    self.cost += 1
                self.perm[a] |= bit_b
                self.perm[b] |= bit_a
                for x in _bits(self.perm[a] & ~bit_b):
                    ops.append(("perm", b, x))
                for x in _bits(self.perm[b] & ~bit_a):
                    ops.append(("perm", a, x))
                for x in _bits(self.forb[a]):
                    ops.append(("forb", b, x))
                for x in _bits(self.forb[b]):
                    ops.append(("forb", a, x))
            else:
                if self.forb[a] & bit_b:
                    continue
                if self.perm[a] & bit_b:
                    raise _Infeasible
                if self.adj[a] & bit_b:
                    self.adj[a] &= ~bit_b
                    self.adj[b] &= ~bit_a
                    self.cost += 1
                self.forb[a] |= bit_b
                self.forb[b] |= bit_a
                for x in _bits(self.perm[a]):
                    ops.append(("forb", x, b))
                for x in _bits(self.perm[b]):
                    ops.append(("forb", a, x))
            if self.cost >= limit:
                raise _Infeasible

    def apply(self, ops, limit) -> "_State | None":
        child = self.copy()
        try:
            child._set(list(ops), limit)
        except _Infeasible:
            return None
        return child

    def merge_twins(self, limit) -> bool:
        ops = []
        for a in range(self.n):
            closed_a = self.adj[a] | 1 << a
            for b in _bits(self.adj[a] & ~self.perm[a] & ~self.forb[a]):
                if b < a:
                    continue
                mask = ~(1 << a | 1 << b)
                if (
                    closed_a == self.adj[b] | 1 << b
                    and self.perm[a] & mask == self.perm[b] & mask
                    and self.forb[a] & mask == self.forb[b] & mask
                ):
                    ops.append(("perm", a, b))
        if not ops:
            return True
        try:
            self._set(ops, limit)
        except _Infeasible:
            return False
        return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _components(adj: list[int], n: int) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= adj[i]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def ce_solve(g: Graph, k: int, cfg: CeConfig = CeConfig(), stats: SearchStats | None = None) -> EditSet | None:
    """Minimum edit set of size at most k turning `g` into a disjoint union of cliques, or None."""
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = stats if stats is not None else SearchStats()
    ids, adj = _index(g)
    n = len(ids)
    best: dict = {"cost": k + 1, "adj": None}
    period = int(cfg.reduction_period)

    def search(state: _State, depth: int):
        stats.tick()
        if cfg.reduction == "critical_clique" and depth % period == 0:
            if not state.merge_twins(best["cost"]):
                return
        bound = _packing(state.adj, n) if cfg.lower_bound == "p3_packing" else 0
        if state.cost + bound >= best["cost"]:
            return
        t = _pick_triple(state.adj, n, cfg.branch_order)
        if t is None:
            best["cost"], best["adj"] = state.cost, list(state.adj)
            return
        u, v, w = t
        branches = (
            [("forb", u, v)],
            [("perm", u, v), ("forb", v, w)],
            [("perm", u, v), ("perm", v, w)],
        )
        for ops in branches:
            child = state.apply(ops, best["cost"])
            if child is not None:
                search(child, depth + 1)

    search(_State(n, adj, [0] * n, [0] * n, 0), 0)
    if best["adj"] is None:
        return None
    final = best["adj"]
    deletions = [(ids[a], ids[b]) for a in range(n) for b in _bits(adj[a] & ~final[a]) if a < b]
    insertions = [(ids[a], ids[b]) for a in range(n) for b in _bits(final[a] & ~adj[a]) if a < b]
    return EditSet(frozenset(deletions), frozenset(insertions))


def edits_for_partition(g: Graph, partition: Partition) -> EditSet:
    owner = partition.cluster_of()
    deletions = [e for e in g.edges() if owner[e[0]] != owner[e[1]]]
    insertions = [e for e in g.non_edges() if owner[e[0]] == owner[e[1]]]
    return EditSet(frozenset(deletions), frozenset(insertions))


@dataclass(frozen=True)
class WeightedInstance:
    """Critical cliques as super-vertices; weight > 0 means all pairs adjacent, < 0 none.

    Putting two super-vertices in one cluster costs -weight when negative,
    separating them costs weight when positive.
    """

    groups: tuple[frozenset[int], ...]
    weight: dict[tuple[int, int], int]

    def cost(self, labels: list[int]) -> int:
        """Cost of assigning super-vertex i to cluster ``labels[i]``."""
        total = 0
        for (i, j), w in self.weight.items():
            same = labels[i] == labels[j]
            if same and w < 0:
                total -= w
            elif not same and w > 0:
                total += w
        return total

    def expand(self, labels: list[int]) -> Partition:
        clusters: dict[int, set[int]] = {}
        for group, lab in zip(self.groups, labels):
            clusters.setdefault(lab, set()).update(group)
        return Partition(tuple(frozenset(c) for c in clusters.values()))


class CeReduction(NamedTuple):
    reduced: WeightedInstance
    forced: frozenset[Edge]
    residual_budget: int


def critical_cliques(g: Graph) -> list[frozenset[int]]:
    classes: dict[frozenset[int], set[int]] = {}
    for v in g.vertices:
        classes.setdefault(g.neighbors(v) | {v}, set()).add(v)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def ce_reduce(g: Graph, budget: int) -> CeReduction | None:
    """Contract critical cliques into weighted super-vertices.

    Some optimal solution never splits a critical clique, so no edits are
    forced and the optimum carries over unchanged.
    """
    if budget < 0:
        return None
    groups = tuple(critical_cliques(g))
    weight = {}
    for i, a in enumerate(groups):
        for j in range(i + 1, len(groups)):
            b = groups[j]
            # critical cliques are modules: adjacency between two is all or nothing
            x, y = next(iter(a)), next(iter(b))
            w = len(a) * len(b)
            weight[(i, j)] = w if g.has_edge(x, y) else -w
    return CeReduction(WeightedInstance(groups, weight), frozenset(), budget)

"""Undirected simple graphs and the connectivity primitives the solvers share.

Graphs are immutable. Every "modification" returns a new graph, so a graph can
be handed to several solver runs at once.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import ComponentTooSmallError

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalized unordered pair; rejects self-loops."""
    if u == v:
        raise ValueError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


def edge_set(pairs: Iterable[tuple[int, int]]) -> frozenset[Edge]:
    return frozenset(edge(u, v) for u, v in pairs)


class Graph:
    """Simple undirected graph over integer vertex ids."""

    __slots__ = ("_adj", "_vertices", "_m")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._vertices = tuple(sorted(adj))
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        self._m = sum(len(a) for a in self._adj.values()) // 2

    @classmethod
    def complete(cls, vertices: Iterable[int]) -> "Graph":
        vs = sorted(vertices)
        return cls(vs, ((u, v) for i, u in enumerate(vs) for v in vs[i + 1:]))

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> list[Edge]:
        return [(u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def non_edges(self) -> list[Edge]:
        vs = self._vertices
        return [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if v not in self._adj[u]]

    def degrees(self) -> dict[int, int]:
        return {v: len(self._adj[v]) for v in self._vertices}

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj.values()), default=0)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        return Graph(keep, ((u, v) for u in keep for v in self._adj[u] & keep if u < v))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        drop = edge_set(edges)
        return Graph(self._vertices, (e for e in self.edges() if e not in drop))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self._vertices, list(self.edges()) + [edge(u, v) for u, v in edges])

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced(v for v in self._vertices if v not in drop)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vertices, self.edge_set()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EditSet:
    """Edge deletions and insertions; the solution object of the edge-editing solvers."""

    deletions: frozenset[Edge] = frozenset()
    insertions: frozenset[Edge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "deletions", edge_set(self.deletions))
        object.__setattr__(self, "insertions", edge_set(self.insertions))
        if self.deletions & self.insertions:
            raise ValueError("a pair cannot be both deleted and inserted")

    @property
    def size(self) -> int:
        return len(self.deletions) + len(self.insertions)

    def __len__(self) -> int:
        return self.size

    def apply(self, g: Graph) -> Graph:
        missing = [e for e in self.deletions if not g.has_edge(*e)]
        present = [e for e in self.insertions if g.has_edge(*e)]
        if missing or present:
            raise ValueError(f"edit set does not match graph: missing={missing} present={present}")
        return g.remove_edges(self.deletions).add_edges(self.insertions)


@dataclass(frozen=True)
class Partition:
    clusters: tuple[frozenset[int], ...]

    def __post_init__(self):
        clusters = tuple(sorted((frozenset(c) for c in self.clusters), key=lambda c: min(c) if c else -1))
        seen: set[int] = set()
        for c in clusters:
            if not c:
                raise ValueError("empty cluster")
            if seen & c:
                raise ValueError("clusters overlap")
            seen |= c
        object.__setattr__(self, "clusters", clusters)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.clusters)

    def covers(self, g: Graph) -> bool:
        return self.vertices == frozenset(g.vertices)

    def cluster_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.clusters) for v in c}

    def __len__(self) -> int:
        return len(self.clusters)

    def __iter__(self):
        return iter(self.clusters)


@dataclass(frozen=True)
class Cut:
    side_a: frozenset[int]
    side_b: frozenset[int]
    crossing: frozenset[Edge] = field(default_factory=frozenset)

    @property
    def size(self) -> int:
        return len(self.crossing)


@dataclass(frozen=True)
class TieBreakPolicy:
    """Which minimum cut to take when several exist.

    ``lexicographic`` is the deterministic default. ``adversarial`` isolates the
    lowest-id vertex whose degree equals the edge connectivity, if any.
    ``random`` permutes the vertex order with a seed derived per component.
    """

    kind: str = "lexicographic"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ("lexicographic", "adversarial", "random"):
            raise ValueError(f"unknown tie-break policy {self.kind!r}")
        if self.kind == "random" and self.seed is None:
            raise ValueError("random policy needs a seed")

    @classmethod
    def lexicographic(cls) -> "TieBreakPolicy":
        return cls("lexicographic")

    @classmethod
    def adversarial(cls) -> "TieBreakPolicy":
        return cls("adversarial")

    @classmethod
    def random(cls, seed: int) -> "TieBreakPolicy":
        return cls("random", seed)

    @classmethod
    def parse(cls, text: str) -> "TieBreakPolicy":
        """Accepts ``lexicographic``, ``adversarial`` or ``random:<seed>``."""
        if text.startswith("random"):
            _, _, seed = text.partition(":")
            return cls.random(int(seed or 0))
        return cls(text)

    def __str__(self) -> str:
        return f"random:{self.seed}" if self.kind == "random" else self.kind


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Connected components, ordered by smallest vertex id."""
    allowed = set(g.vertices) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in allowed and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    return len(connected_components(g, within)) <= 1


def _stoer_wagner(g: Graph, component: frozenset[int], rank: dict[int, int]) -> tuple[int, frozenset[int]]:
    # Node-merging min cut; ties in the maximum-adjacency order go to the lowest rank.
    weight: dict[int, dict[int, int]] = {
        v: {w: 1 for w in g.neighbors(v) if w in component} for v in component
    }
    members = {v: [v] for v in component}
    best, best_side = None, None
    while len(weight) > 1:
        alive = sorted(weight, key=rank.__getitem__)
        start = alive[0]
        conn = {v: 0 for v in alive}
        in_a = {start}
        for w, c in weight[start].items():
            conn[w] += c
        prev, last = start, start
        while len(in_a) < len(alive):
            nxt = None
            for v in alive:
                if v in in_a:
                    continue
                if nxt is None or conn[v] > conn[nxt]:
                    nxt = v
            in_a.add(nxt)
            prev, last = last, nxt
            for w, c in weight[nxt].items():
                if w not in in_a:
                    conn[w] += c
        cut_value = conn[last]
        if best is None or cut_value < best:
            best, best_side = cut_value, frozenset(members[last])
        # merge `last` into `prev`
        for w, c in weight.pop(last).items():
            del weight[w][last]
            if w != prev:
                weight[prev][w] = weight[prev].get(w, 0) + c
                weight[w][prev] = weight[prev][w]
        members[prev].extend(members.pop(last))
    return best, best_side


def _rank(component: frozenset[int], policy: TieBreakPolicy) -> dict[int, int]:
    order = sorted(component)
    if policy.kind == "random":
        rng = random.Random(f"{policy.seed}:{order}")
        rng.shuffle(order)
    return {v: i for i, v in enumerate(order)}


def _crossing(g: Graph, side: frozenset[int], component: frozenset[int]) -> frozenset[Edge]:
    return frozenset(edge(u, w) for u in side for w in g.neighbors(u) if w in component and w not in side)


def min_cut(g: Graph, component: Iterable[int], policy: TieBreakPolicy = TieBreakPolicy()) -> Cut:
    """A minimum edge cut of the subgraph induced by `component`.

    `side_a` is always the side holding the smallest vertex id.
    """
    comp = frozenset(component)
    if len(comp) < 2:
        raise ComponentTooSmallError(f"min cut needs at least 2 vertices, got {len(comp)}")
    if len(comp) == 2:
        side = frozenset([min(comp)])
    else:
        value, side = _stoer_wagner(g, comp, _rank(comp, policy))
        if policy.kind == "adversarial":
            for v in sorted(comp):
                if sum(1 for w in g.neighbors(v) if w in comp) == value:
                    side = frozenset([v])
                    break
    other = comp - side
    if min(comp) not in side:
        side, other = other, side
    return Cut(side, other, _crossing(g, side, comp))


def edge_connectivity(g: Graph, component: Iterable[int] | None = None) -> int:
    comp = frozenset(g.vertices if component is None else component)
    if len(comp) <= 1:
        return 0
    if len(comp) == 2:
        u, v = sorted(comp)
        return 1 if g.has_edge(u, v) else 0
    value, _ = _stoer_wagner(g, comp, _rank(comp, TieBreakPolicy()))
    return value


def is_highly_connected(g: Graph, component: Iterable[int] | None = None) -> bool:
    """Edge connectivity strictly above half the vertex count; singletons count as highly connected."""
    comp = frozenset(g.vertices if component is None else component)
    size = len(comp)
    if size <= 1:
        return True
    # lambda <= min degree, so a low-degree vertex already decides it
    if any(2 * sum(1 for w in g.neighbors(v) if w in comp) <= size for v in comp):
        return False
    return 2 * edge_connectivity(g, comp) > size


def cut_edges(g: Graph, side: Iterable[int], within: Iterable[int] | None = None) -> frozenset[Edge]:
    """Edges with exactly one endpoint in `side` (restricted to `within`)."""
    scope = frozenset(g.vertices if within is None else within)
    return _crossing(g, frozenset(side), scope)


def deletion_set_for(g: Graph, partition: Partition) -> frozenset[Edge]:
    owner = partition.cluster_of()
    return frozenset((u, v) for u, v in g.edges() if owner[u] != owner[v])

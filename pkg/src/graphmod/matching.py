"""Maximum bipartite matching (Hopcroft-Karp) and Koenig vertex covers."""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable


def _adjacency(left, right, edges):
    adj = {u: [] for u in left}
    right = set(right)
    for u, v in edges:
        if u not in adj or v not in right:
            raise ValueError(f"edge ({u!r}, {v!r}) does not cross from left to right")
        adj[u].append(v)
    for u in adj:
        adj[u] = sorted(set(adj[u]), key=repr)
    return adj


def max_bipartite_matching(
    left: Iterable[Hashable], right: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]
) -> set[tuple[Hashable, Hashable]]:
    """Maximum-cardinality matching; returned as a set of ``(left, right)`` pairs."""
    left = list(left)
    right = list(right)
    mate_l, _ = _hopcroft_karp(left, right, _adjacency(left, right, edges))
    return {(u, v) for u, v in mate_l.items() if v is not None}


def _hopcroft_karp(left, right, adj):
    mate_l = {u: None for u in left}
    mate_r = {v: None for v in right}
    inf = float("inf")

    while True:
        # BFS layering from the free left vertices
        dist = {}
        queue = deque()
        for u in left:
            if mate_l[u] is None:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = mate_r[v]
                if w is None:
                    found = True
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            break

        def augment(u):
            # iterative DFS along the layered graph
            stack = [(u, iter(adj[u]))]
            path = []
            while stack:
                x, it = stack[-1]
                advanced = False
                for v in it:
                    w = mate_r[v]
                    if w is None:
                        path.append((x, v))
                        for a, b in path:
                            mate_l[a] = b
                            mate_r[b] = a
                        return True
                    if dist.get(w, inf) == dist[x] + 1:
                        path.append((x, v))
                        stack.append((w, iter(adj[w])))
                        advanced = True
                        break
                if not advanced:
                    dist[x] = inf
                    stack.pop()
                    if path:
                        path.pop()
            return False

        progressed = False
        for u in left:
            if mate_l[u] is None and augment(u):
                progressed = True
        if not progressed:
            break
    return mate_l, mate_r


def koenig_cover(left, right, edges):
    """Minimum vertex cover of a bipartite graph together with a maximum matching.

    Uses alternating reachability from the unmatched left vertices: the cover is
    the unreached left vertices plus the reached right vertices.
    """
    left = list(left)
    right = list(right)
    adj = _adjacency(left, right, edges)
    mate_l, mate_r = _hopcroft_karp(left, right, adj)
    reached_l = {u for u in left if mate_l[u] is None}
    reached_r = set()
    queue = deque(reached_l)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in reached_r:
                continue
            reached_r.add(v)
            w = mate_r[v]
            if w is not None and w not in reached_l:
                reached_l.add(w)
                queue.append(w)
    cover = {u for u in left if u not in reached_l} | reached_r
    matching = {(u, v) for u, v in mate_l.items() if v is not None}
    return cover, matching

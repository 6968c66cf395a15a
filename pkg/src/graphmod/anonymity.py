"""Degree Anonymity by edge insertion.

The heuristic works in two phases: first choose target degrees that are
l-anonymous (a dynamic program over the descending degree sequence), then try
to realize the increments with new edges. When realization fails the target
cost is raised and the phases repeat.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .errors import ResourceLimitError
from .graph import EditSet, Edge, Graph, edge


def is_l_anonymous(g: Graph, ell: int) -> bool:
    """Every occurring degree is shared by at least `ell` vertices."""
    return is_anonymous_sequence(g.degrees().values(), ell)


def is_anonymous_sequence(degrees, ell: int) -> bool:
    if ell < 1:
        raise ValueError("ell must be at least 1")
    return all(c >= ell for c in Counter(degrees).values())


def _as_mapping(degrees) -> dict[int, int]:
    if isinstance(degrees, Mapping):
        return dict(degrees)
    return dict(enumerate(degrees))


def _sorted_vertices(deg: Mapping[int, int]) -> list[int]:
    return sorted(deg, key=lambda v: (-deg[v], v))


def anonymize_degree_sequence(degrees, ell: int):
    """Cheapest l-anonymous targets reachable by raising degrees.

    `degrees` is a mapping vertex -> degree or a plain sequence; the targets
    come back in the same shape. Blocks of consecutive sorted degrees are
    raised to their maximum; block sizes between ell and 2*ell - 1 suffice.
    Returns ``(targets, cost)`` with cost the total degree increase.
    """
    deg = _as_mapping(degrees)
    n = len(deg)
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if n and ell > n:
        raise ValueError(f"ell={ell} exceeds the number of vertices {n}")
    order = _sorted_vertices(deg)
    d = [deg[v] for v in order]
    prefix = [0]
    for x in d:
        prefix.append(prefix[-1] + x)
    inf = math.inf
    best = [0] + [inf] * n
    choice = [0] * (n + 1)
    for i in range(ell, n + 1):
        for size in range(ell, min(2 * ell - 1, i) + 1):
            j = i - size
            if best[j] == inf:
                continue
            c = best[j] + size * d[j] - (prefix[i] - prefix[j])
            if c < best[i]:
                best[i], choice[i] = c, j
    targets = {}
    i = n
    while i > 0:
        j = choice[i]
        for v in order[j:i]:
            targets[v] = d[j]
        i = j
    cost = int(best[n])
    if isinstance(degrees, Mapping):
        return targets, cost
    return [targets[v] for v in range(n)], cost


def _grouping_at_least(order: list[int], deg: Mapping[int, int], ell: int, top: int, threshold: int):
    """Cheapest block grouping whose cost is at least `threshold`.

    Blocks may have any size >= ell and may be raised above their maximum, up
    to `top`. Raising everything to `top` is always available, so this only
    fails past that cost.
    """
    d = [deg[v] for v in order]
    n = len(d)
    prefix = [0]
    for x in d:
        prefix.append(prefix[-1] + x)
    reach: list[dict[int, tuple[int, int]]] = [dict() for _ in range(n + 1)]
    reach[0][0] = (0, 0)
    for i in range(ell, n + 1):
        for j in range(0, i - ell + 1):
            if not reach[j]:
                continue
            size = i - j
            for value in range(d[j], top + 1):
                block = size * value - (prefix[i] - prefix[j])
                for c0 in reach[j]:
                    reach[i].setdefault(c0 + block, (j, value))
    feasible = sorted(c for c in reach[n] if c >= threshold)
    if not feasible:
        return None
    cost = feasible[0]
    targets = {}
    i, c = n, cost
    while i > 0:
        j, value = reach[i][c]
        block = (i - j) * value - (prefix[i] - prefix[j])
        for v in order[j:i]:
            targets[v] = value
        i, c = j, c - block
    return targets, cost


@dataclass
class IncrementPlan:
    increment: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.increment.values())


def realize_increments(g: Graph, plan) -> frozenset[Edge] | None:
    """Insert non-edges so that every vertex gains exactly its increment.

    Greedy: the vertex with the largest residual demand is joined to the
    eligible vertices with the next-largest demands (ties by id). Returns
    ``None`` when the greedy gets stuck or the plan is infeasible outright.
    """
    inc = plan.increment if isinstance(plan, IncrementPlan) else dict(plan)
    if any(x < 0 for x in inc.values()):
        raise ValueError("increments must be non-negative")
    if sum(inc.values()) % 2:
        return None
    top = g.n - 1
    if any(g.degree(v) + x > top for v, x in inc.items()):
        return None
    residual = {v: x for v, x in inc.items() if x > 0}
    added: set[Edge] = set()
    while residual:
        u = min(residual, key=lambda v: (-residual[v], v))
        need = residual.pop(u)
        partners = sorted(
            (w for w in residual if not g.has_edge(u, w) and edge(u, w) not in added),
            key=lambda w: (-residual[w], w),
        )
        if len(partners) < need:
            return None
        for w in partners[:need]:
            added.add(edge(u, w))
            residual[w] -= 1
            if residual[w] == 0:
                del residual[w]
    return frozenset(added)


def _distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # lexicographic order starting from the descending arrangement
    seq = sorted(items, reverse=True)
    while True:
        yield tuple(seq)
        i = len(seq) - 2
        while i >= 0 and seq[i] <= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(seq) - 1
        while seq[j] >= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def _plans(deg: Mapping[int, int], targets: Mapping[int, int], limit: int) -> Iterator[dict[int, int]]:
    # Vertices of equal degree are interchangeable for the targets; try
    # different assignments of the increments within each degree class.
    classes: dict[int, list[int]] = {}
    for v in sorted(deg):
        classes.setdefault(deg[v], []).append(v)
    keys = sorted(classes, reverse=True)
    options = []
    for x in keys:
        incs = [targets[v] - x for v in classes[x]]
        options.append(list(itertools.islice(_distinct_permutations(incs), limit)))
    for combo in itertools.islice(itertools.product(*options), limit):
        plan = {}
        for x, arrangement in zip(keys, combo):
            plan.update(zip(classes[x], arrangement))
        yield plan


def lt_heuristic(g: Graph, ell: int, max_assignments: int = 256) -> EditSet:
    """Edge insertions making `g` l-anonymous, via target degrees then realization."""
    if g.n == 0:
        return EditSet()
    deg = g.degrees()
    targets, cost = anonymize_degree_sequence(deg, ell)
    order = _sorted_vertices(deg)
    while True:
        if cost % 2 == 0:
            for plan in _plans(deg, targets, max_assignments):
                added = realize_increments(g, plan)
                if added is not None:
                    return EditSet(insertions=added)
        nxt = _grouping_at_least(order, deg, ell, g.n - 1, cost + 1)
        if nxt is None:
            raise RuntimeError("no realizable anonymization found; the complete graph should always be one")
        targets, cost = nxt


def anon_exact(g: Graph, ell: int, k: int, max_candidates: int = 5_000_000) -> EditSet | None:
    """Smallest insertion set of size <= k making `g` l-anonymous, by exhaustive search."""
    if k < 0:
        raise ValueError("k must be non-negative")
    slots = g.non_edges()
    k = min(k, len(slots))
    total = sum(math.comb(len(slots), i) for i in range(k + 1))
    if total > max_candidates:
        raise ResourceLimitError(f"{total} candidate insertion sets exceed the cap of {max_candidates}")
    base = g.degrees()
    for size in range(k + 1):
        for chosen in itertools.combinations(slots, size):
            deg = dict(base)
            for u, v in chosen:
                deg[u] += 1
                deg[v] += 1
            if is_anonymous_sequence(deg.values(), ell):
                return EditSet(insertions=frozenset(chosen))
    return None


def win_win_certificate(delta: int, lower_bound: int) -> bool:
    """True when a proven lower bound on the optimum exceeds 2 * delta**4.

    In that regime the target-degree heuristic is known to be optimal.
    """
    return lower_bound > 2 * delta ** 4


def insertion_lower_bound(g: Graph, ell: int) -> int:
    """Each inserted edge raises the degree sum by two, so half the DP cost bounds the optimum."""
    _, cost = anonymize_degree_sequence(g.degrees(), ell)
    return (cost + 1) // 2


def certify_optimal(g: Graph, ell: int) -> bool:
    return win_win_certificate(g.max_degree(), insertion_lower_bound(g, ell))

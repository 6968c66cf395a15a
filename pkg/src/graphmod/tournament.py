"""Feedback Arc Set in Tournaments: acyclicity check, exact solver, k-exchange local search."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidSolutionError, ResourceLimitError

Arc = tuple[int, int]


@dataclass(frozen=True)
class Tournament:
    """Vertices 0..n-1 with exactly one arc between every pair."""

    n: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) outside 0..{self.n - 1}")
            if (v, u) in arcs:
                raise ValueError(f"both arcs between {u} and {v}")
        if len(arcs) != self.n * (self.n - 1) // 2:
            raise ValueError("not a tournament: some pair has no arc")

    @classmethod
    def from_order(cls, order: Iterable[int]) -> "Tournament":
        """Transitive tournament with every arc pointing forward in `order`."""
        order = list(order)
        return cls(len(order), frozenset((u, v) for i, u in enumerate(order) for v in order[i + 1:]))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Tournament":
        arcs = set()
        for u in range(n):
            for v in range(u + 1, n):
                arcs.add((u, v) if rng.random() < 0.5 else (v, u))
        return cls(n, frozenset(arcs))

    def relabel(self, perm: list[int]) -> "Tournament":
        return Tournament(self.n, frozenset((perm[u], perm[v]) for u, v in self.arcs))


def _check_subset(t: Tournament, s: frozenset[Arc]) -> None:
    missing = s - t.arcs
    if missing:
        raise ValueError(f"arcs not in the tournament: {sorted(missing)}")


def _acyclic(n: int, arcs: Iterable[Arc]) -> bool:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        out[u].append(v)
        indeg[v] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return seen == n


def is_acyclic_after(t: Tournament, s: Iterable[Arc]) -> bool:
    s = frozenset(s)
    _check_subset(t, s)
    return _acyclic(t.n, t.arcs - s)


def backward_arcs(t: Tournament, order: Iterable[int]) -> frozenset[Arc]:
    """Arcs pointing against `order`; deleting them always leaves an acyclic graph."""
    pos = {v: i for i, v in enumerate(order)}
    return frozenset((u, v) for u, v in t.arcs if pos[u] > pos[v])


def fas_exact(t: Tournament, max_n: int = 9) -> frozenset[Arc]:
    """Minimum feedback arc set via dynamic programming over vertex-ordering prefixes."""
    if t.n > max_n:
        raise ResourceLimitError(f"tournament with {t.n} vertices exceeds the exact cap of {max_n}")
    n = t.n
    out = [0] * n
    for u, v in t.arcs:
        out[u] |= 1 << v
    full = (1 << n) - 1
    best = [0] + [None] * full
    last = [0] * (full + 1)
    for mask in range(1, full + 1):
        b = None
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            prev = best[mask ^ low]
            # v comes last among `mask`: its arcs into earlier vertices point backward
            c = prev + (out[v] & (mask ^ low)).bit_count()
            if b is None or c < b:
                b, last[mask] = c, v
            rest ^= low
        best[mask] = b
    order = []
    mask = full
    while mask:
        v = last[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    return backward_arcs(t, order)


def _cyclic_arcs(n: int, arcs: frozenset[Arc]) -> list[Arc]:
    # arcs inside nontrivial strongly connected components (the only ones worth deleting)
    reach = [1 << v for v in range(n)]
    for u, v in arcs:
        reach[u] |= 1 << v
    for w in range(n):
        bit = 1 << w
        for u in range(n):
            if reach[u] & bit:
                reach[u] |= reach[w]
    return sorted((u, v) for u, v in arcs if reach[v] >> u & 1)


def ls_fast(t: Tournament, s: Iterable[Arc], k: int) -> frozenset[Arc] | None:
    """A strictly smaller deletion set within symmetric-difference distance k of `s`, or None.

    Removals R come from `s`; for each R the smallest set of extra deletions
    that restores acyclicity is searched among arcs on remaining cycles.
    """
    s = frozenset(s)
    _check_subset(t, s)
    if not _acyclic(t.n, t.arcs - s):
        raise InvalidSolutionError("seed arc set does not make the tournament acyclic")
    best, best_key = None, None
    members = sorted(s)
    for r in range(1, min(k, len(members)) + 1):
        for removed in itertools.combinations(members, r):
            kept = s.difference(removed)
            remaining = t.arcs - kept
            room = min(r - 1, k - r)
            found = None
            if _acyclic(t.n, remaining):
                found = ()
            elif room > 0:
                eligible = [a for a in _cyclic_arcs(t.n, remaining) if a not in s]
                for size in range(1, room + 1):
                    for added in itertools.combinations(eligible, size):
                        if _acyclic(t.n, remaining.difference(added)):
                            found = added
                            break
                    if found is not None:
                        break
            if found is None:
                continue
            cand = kept.union(found)
            key = (len(cand), r + len(found), removed, found)
            if best_key is None or key < best_key:
                best, best_key = frozenset(cand), key
    return best

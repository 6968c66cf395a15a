"""Vertex Cover: half-integral LP relaxation, LP-based reduction, above-LP search, k-exchange local search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import InvalidSolutionError
from .graph import Graph
from .matching import koenig_cover
from .stats import SearchStats

HALF = Fraction(1, 2)


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    s = set(cover)
    return all(u in s or v in s for u, v in g.edges())


def exchange_distance(old: Iterable[int], new: Iterable[int]) -> int:
    return len(set(old) ^ set(new))


@dataclass(frozen=True)
class HalfIntegralAssignment:
    value: dict[int, Fraction]

    @property
    def lp_value(self) -> Fraction:
        return sum(self.value.values(), Fraction(0))

    def is_feasible(self, g: Graph) -> bool:
        return all(self.value[u] + self.value[v] >= 1 for u, v in g.edges()) and all(
            x in (0, HALF, 1) for x in self.value.values()
        )


def _double_cover_values(g: Graph) -> dict[int, Fraction]:
    # every vertex gets a left and a right copy; an edge uv becomes (u_L, v_R) and (v_L, u_R)
    left = [(0, v) for v in g.vertices]
    right = [(1, v) for v in g.vertices]
    edges = [((0, u), (1, v)) for u, v in g.edges()] + [((0, v), (1, u)) for u, v in g.edges()]
    cover, _ = koenig_cover(left, right, edges)
    return {v: Fraction(((0, v) in cover) + ((1, v) in cover), 2) for v in g.vertices}


def _lp_value(g: Graph) -> Fraction:
    return sum(_double_cover_values(g).values(), Fraction(0))


def lp_half_integral(g: Graph) -> HalfIntegralAssignment:
    """Optimal half-integral LP solution with as few 1/2 entries as possible.

    A first optimum comes from a minimum vertex cover of the bipartite double
    cover. Then each remaining 1/2 vertex is tentatively fixed to 0 (its
    neighbours to 1) or to 1; a fix is kept when the LP value does not move.
    Once no fix is possible the all-1/2 residual is the unique optimum there.
    """
    values: dict[int, Fraction] = {}

    def absorb(sol):
        for v, x in sol.items():
            if x != HALF:
                values[v] = x
        return g.induced(v for v, x in sol.items() if x == HALF)

    residual = absorb(_double_cover_values(g))
    progress = True
    while progress and residual.n:
        progress = False
        target = Fraction(residual.n, 2)
        for v in residual.vertices:
            nbrs = residual.neighbors(v)
            rest = residual.remove_vertices(nbrs | {v})
            if len(nbrs) + _lp_value(rest) == target:
                values[v] = Fraction(0)
                for w in nbrs:
                    values[w] = Fraction(1)
                residual = absorb(_double_cover_values(rest))
                progress = True
                break
            rest = residual.remove_vertices([v])
            if 1 + _lp_value(rest) == target:
                values[v] = Fraction(1)
                residual = absorb(_double_cover_values(rest))
                progress = True
                break
    for v in residual.vertices:
        values[v] = HALF
    return HalfIntegralAssignment({v: values[v] for v in g.vertices})


class NtReduction(NamedTuple):
    forced_in: frozenset[int]
    forced_out: frozenset[int]
    residual: Graph


def nt_reduce(g: Graph, a: HalfIntegralAssignment | None = None) -> NtReduction:
    """Value-1 vertices go into the cover, value-0 vertices stay out, the 1/2 part remains."""
    a = a if a is not None else lp_half_integral(g)
    ones = frozenset(v for v, x in a.value.items() if x == 1)
    zeros = frozenset(v for v, x in a.value.items() if x == 0)
    return NtReduction(ones, zeros, g.induced(v for v, x in a.value.items() if x == HALF))


def vc_above_lp(g: Graph, k: int, stats: SearchStats | None = None) -> frozenset[int] | None:
    """Minimum vertex cover of size at most k, or None.

    Each node reduces by the LP, prunes when the LP value exceeds the remaining
    budget, and branches on a maximum-degree 1/2 vertex v: v joins the cover,
    or all of N(v) does.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    stats = stats if stats is not None else SearchStats()

    def search(h: Graph, budget: int):
        stats.tick()
        if h.m == 0:
            return frozenset()
        a = lp_half_integral(h)
        if a.lp_value > budget:
            return None
        forced_in, _, rest = nt_reduce(h, a)
        budget -= len(forced_in)
        rest = rest.remove_vertices(v for v in rest.vertices if rest.degree(v) == 0)
        if rest.m == 0:
            return forced_in
        v = min(rest.vertices, key=lambda u: (-rest.degree(u), u))
        best = None
        sub = search(rest.remove_vertices([v]), budget - 1)
        if sub is not None:
            best = sub | {v}
            budget = len(best) - 1
        nbrs = rest.neighbors(v)
        if len(nbrs) <= budget:
            sub = search(rest.remove_vertices(nbrs | {v}), budget - len(nbrs))
            if sub is not None and len(sub) + len(nbrs) <= budget:
                best = sub | nbrs
        return None if best is None else forced_in | best

    return search(g, k)


def ls_vertex_cover(g: Graph, s: Iterable[int], k: int) -> frozenset[int] | None:
    """A strictly smaller vertex cover within exchange distance k of `s`, or None.

    Exhaustive over removal sets R of s with |R| <= k: R has to be independent
    and N(R) outside s has to come in. Exponential in k; no FPT algorithm is
    expected here. Among improvements the smallest cover wins, then the
    shortest exchange, then the lexicographically first removal set.
    """
    cover = frozenset(s)
    if not is_vertex_cover(g, cover):
        raise InvalidSolutionError("seed set is not a vertex cover")
    best, best_key = None, None
    members = sorted(cover)
    for r in range(1, min(k, len(members)) + 1):
        for removed in itertools.combinations(members, r):
            rset = set(removed)
            if any(g.neighbors(u) & rset for u in removed):
                continue
            added = set().union(*(g.neighbors(u) for u in removed)) - cover
            if len(added) >= r or r + len(added) > k:
                continue
            cand = (cover - rset) | added
            key = (len(cand), r + len(added), removed, tuple(sorted(added)))
            if best_key is None or key < best_key:
                best, best_key = frozenset(cand), key
    return best

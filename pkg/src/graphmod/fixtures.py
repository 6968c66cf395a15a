"""Small illustrative instances used by the demos, the fixture runner and the tests.

Vertex ids are 0-based.
"""

from .graph import Graph


def hcd_example() -> Graph:
    """A triangle (0, 1, 2) and a 5-vertex cluster (3..7) joined by three edges."""
    triangle = [(0, 1), (1, 2), (0, 2)]
    cluster = [(3, 4), (4, 5), (5, 6), (6, 7), (3, 6), (3, 7), (4, 7), (5, 7)]
    crossing = [(0, 7), (1, 5), (0, 6)]
    return Graph(range(8), triangle + cluster + crossing)


HCD_EXAMPLE_SOLUTION = frozenset({(0, 7), (1, 5), (0, 6)})


def anonymity_example() -> Graph:
    """Degrees (1, 1, 3, 2, 2, 1); inserting {3, 5} makes it 2-anonymous."""
    return Graph(range(6), [(0, 3), (1, 2), (2, 3), (2, 4), (4, 5)])


ANONYMITY_EXAMPLE_SOLUTION = frozenset({(3, 5)})


def local_search_vc_example() -> tuple[Graph, frozenset[int]]:
    """A graph with a size-5 vertex cover that a 3-exchange shrinks to size 4."""
    g = Graph(range(6), [(0, 3), (0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)])
    return g, frozenset({0, 2, 3, 4, 5})


LOCAL_SEARCH_VC_IMPROVED = frozenset({0, 1, 2, 5})


def vc_lp_example() -> Graph:
    """Triangle 0-1-2, vertex 3 adjacent to 1 and 2, pendants 4 and 5 on 3.

    LP optimum is (1/2, 1/2, 1/2, 1, 0, 0) with value 5/2; a minimum cover has 3 vertices.
    """
    return Graph(range(6), [(0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (3, 4), (3, 5)])


def crown_graph(pairs: int = 3) -> Graph:
    """Complete bipartite graph minus a perfect matching, ids interleaved a1, b1, a2, b2, ...

    Greedy coloring in id order needs `pairs` colors on it although it is bipartite.
    """
    a = [2 * i for i in range(pairs)]
    b = [2 * i + 1 for i in range(pairs)]
    return Graph(range(2 * pairs), [(a[i], b[j]) for i in range(pairs) for j in range(pairs) if i != j])

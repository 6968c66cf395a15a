"""Greedy coloring versus insertion with bounded recoloring.

On the crown graph, greedy in vertex order opens a third color; allowing two
recolorings per insertion finds the bipartition.
"""
import random

from graphmod.coloring import greedy_coloring, ilc_color_graph
from graphmod.fixtures import crown_graph
from graphmod.graph import Graph

g = crown_graph(3)
lists = {v: frozenset(range(3)) for v in g.vertices}
print("greedy:", greedy_coloring(g, lists))
print("c=2:   ", ilc_color_graph(g, lists, 2))

rng = random.Random(0)
wins = 0
for _ in range(300):
    n = rng.randint(5, 14)
    h = Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
    full = {v: frozenset(range(h.max_degree() + 1)) for v in h.vertices}
    wins += len(set(ilc_color_graph(h, full, 2).values())) < len(set(greedy_coloring(h, full).values()))
print(f"random graphs where recoloring saves a color: {wins}/300")

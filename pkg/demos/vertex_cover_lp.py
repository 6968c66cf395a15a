"""The half-integral LP relaxation of vertex cover and what it buys.

Vertices valued 1 go into the cover, vertices valued 0 stay out, and the
search only has to branch on the 1/2 part.
"""
from graphmod.fixtures import crown_graph, local_search_vc_example, vc_lp_example
from graphmod.stats import SearchStats
from graphmod.vertex_cover import exchange_distance, lp_half_integral, ls_vertex_cover, nt_reduce, vc_above_lp

g = vc_lp_example()
a = lp_half_integral(g)
print("LP values:", {v: str(x) for v, x in a.value.items()}, "total", a.lp_value)
red = nt_reduce(g, a)
print("forced in", sorted(red.forced_in), "forced out", sorted(red.forced_out), "left", red.residual.vertices)
for k in (2, 3):
    print(f"cover with k={k}:", vc_above_lp(g, k))

crown = crown_graph(5)
stats = SearchStats()
cover = vc_above_lp(crown, 5, stats)
print(f"\ncrown on 10 vertices: LP {lp_half_integral(crown).lp_value}, cover {sorted(cover)}, {stats.nodes} search nodes")

g, seed = local_search_vc_example()
better = ls_vertex_cover(g, seed, k=3)
print(f"\nlocal search: {sorted(seed)} -> {sorted(better)} (distance {exchange_distance(seed, better)})")

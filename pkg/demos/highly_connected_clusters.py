"""Clustering by deleting edges until every component is highly connected.

The recursive min-cut heuristic is fast but depends on which minimum cut it
happens to pick. On the adversarial family below an unlucky choice costs
quadratically more than the optimum.
"""
from graphmod.fixtures import hcd_example
from graphmod.graph import TieBreakPolicy
from graphmod.hcd import gen_adversarial, hcd_exact, hs_cluster

g = hcd_example()
sol = hcd_exact(g, k=3)
print("small example:", g)
print("  optimal deletions:", sorted(sol.deleted))
print("  clusters:", [sorted(c) for c in sol.clusters.clusters])

print("\nadversarial family (exact vs heuristic with unlucky cuts)")
for n in range(3, 8):
    inst = gen_adversarial(n)
    exact = hcd_exact(inst.graph, inst.graph.m).cost
    lucky = hs_cluster(inst.graph, TieBreakPolicy.lexicographic()).cost
    unlucky = hs_cluster(inst.graph, TieBreakPolicy.adversarial()).cost
    print(f"  n={n}: exact {exact:3d}   lexicographic {lucky:3d}   adversarial {unlucky:3d}")

"""Making every degree appear at least ell times by inserting edges."""
import random

from graphmod.anonymity import anon_exact, anonymize_degree_sequence, certify_optimal, is_l_anonymous, lt_heuristic
from graphmod.fixtures import anonymity_example
from graphmod.graph import Graph

g = anonymity_example()
print("degrees:", g.degrees())
targets, cost = anonymize_degree_sequence(g.degrees(), 2)
print("cheapest 2-anonymous targets:", targets, "(total increase", cost, ")")

edits = lt_heuristic(g, 2)
print("heuristic inserts", sorted(edits.insertions), "->", is_l_anonymous(edits.apply(g), 2))
print("exhaustive optimum:", anon_exact(g, 2, k=3).size)

rng = random.Random(1)
n = 40
big = Graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.1])
for ell in (2, 3, 5):
    es = lt_heuristic(big, ell)
    print(f"G(40, 0.1), ell={ell}: {es.size} insertions, provably optimal: {certify_optimal(big, ell)}")

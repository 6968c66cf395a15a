"""Local search for feedback arc sets in tournaments.

Start from the backward arcs of a random ranking and keep asking for a
strictly smaller solution within a few arc exchanges.
"""
import random

from graphmod.tournament import Tournament, backward_arcs, fas_exact, ls_fast

rng = random.Random(4)
t = Tournament.random(8, rng)
order = list(range(t.n))
rng.shuffle(order)
s = backward_arcs(t, order)
print(f"random ranking leaves {len(s)} backward arcs; optimum is {len(fas_exact(t))}")

for k in (1, 2, 3):
    steps = 0
    cur = s
    while (nxt := ls_fast(t, cur, k)) is not None:
        cur, steps = nxt, steps + 1
    print(f"k={k}: {steps} improving steps, local optimum of size {len(cur)}")

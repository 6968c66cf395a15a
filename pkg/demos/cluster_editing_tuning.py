"""Exact cluster editing and a grid search over its solver options.

Node counts, not seconds, decide the winner, so the report is the same on
every machine.
"""
from graphmod.cluster_editing import CeConfig, ce_solve
from graphmod.stats import SearchStats
from graphmod.tuner import random_corpus, tune

corpus = random_corpus(20, n=7, p=0.6, seed=7)
name, g = corpus[0]
stats = SearchStats()
edits = ce_solve(g, g.m, CeConfig(), stats)
print(f"{name}: {edits.size} edits ({len(edits.deletions)} deletions), {stats.nodes} nodes")

report = tune(corpus, seed=7)
ranked = sorted(zip(report.totals(), report.configs), key=lambda p: p[0])
for total, cfg in ranked[:3] + ranked[-2:]:
    print(f"  {total:6d}  {cfg.label()}")
print("winner:", report.winner.label())

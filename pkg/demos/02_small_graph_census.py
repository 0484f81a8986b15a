"""
Counting redundancy over all small graphs
=========================================

Generates every graph up to order 7, tabulates the classes and checks the
closed-form count of graphs with a complete component.
"""

import time

from redgraph import enumeration as en
from redgraph.enumeration import StatsRow

cols = StatsRow.header()[1:7]
print("n  " + "  ".join(cols))
t0 = time.perf_counter()
for n in range(1, 8):
    row, _ = en.stats_rows(n)
    print(f"{n}  " + "  ".join(f"{x:>{len(c)}}" for x, c in zip(row.counts(), cols)))
print(f"({time.perf_counter() - t0:.1f}s)")

# The generator and the cycle-index count must agree
for n in range(1, 8):
    print(n, en.polya_graph_count(n), sum(1 for _ in en.generate_all(n)))

# kappa needs no generation at all
print("kappa(1..11):", [en.kappa(n) for n in range(1, 12)])

# Weak graphs are rare, and never very dense
for n in range(5, 9):
    count = sum(1 for _ in en.weak_graphs(n, connected=True))
    e, f = en.max_weak_edges(n)
    print(f"order {n}: {count} connected weak graphs; densest has {e} edges, {f} short of complete")

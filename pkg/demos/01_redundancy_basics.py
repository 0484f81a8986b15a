"""
Which vertices can you delete without stretching any distance?
==============================================================

A tour of the redundancy tests on a handful of small graphs.
"""

from redgraph import classify, from_graph6, to_graph6
from redgraph.named import cycle, hypercube, petersen, wheel
from redgraph.redundancy import chordless_cycle_witness, link_kind, weak_pairs

# A 5-cycle: every vertex sits on a long induced cycle, so none can go.
c5 = cycle(5)
rep = classify(c5)
print(to_graph6(c5), rep.graph_class.value, rep.counts)

# The wheel adds a hub that shortcuts the rim.
w = wheel(5)
rep = classify(w)
print("wheel:", rep.graph_class.value, "redundant flags", rep.redundant)

# Redundancy is local: v is fine when every pair of its neighbours
# is adjacent or has some other common neighbour.
g = from_graph6("D?{")
print("D?{ ->", classify(g).graph_class.value, classify(g).redundant)

# A critical vertex on a long induced cycle comes with a witness
print("witness in C5 through 0:", chordless_cycle_witness(c5, 0))
print("witness in the Petersen graph:", chordless_cycle_witness(petersen(), 0))

# Links between non-adjacent vertices
q3 = hypercube(3)
print("Q3 links from 0:", {v: link_kind(q3, 0, v).value for v in range(1, 8)})
print("weak pairs in C5:", weak_pairs(c5))

# The JSON form is what `redgraph analyze` prints
print(classify(q3).to_json())

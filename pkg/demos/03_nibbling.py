"""
Nibbling a graph down to nothing
================================

Deleting a redundant vertex never changes the remaining distances, so we
can keep going as long as one exists. The order matters.
"""

from redgraph import from_graph6, to_graph6
from redgraph.nibble import (
    MeshSpec,
    NibblePolicy,
    Selector,
    bfs_distance,
    is_interior,
    mesh_distance_query,
    mesh_graph,
    nibble,
    nibbles_to_zero,
    rectangle,
)

g = from_graph6("GDoC~G")

# Taking the lowest index first gets stuck after one step...
t = nibble(g, NibblePolicy(Selector.FIRST_INDEX), audit=True)
print("first index:", t.deletions, t.final_class.value, to_graph6(t.final))

# ...while a search over deletion orders empties the graph
t = nibble(g, NibblePolicy(Selector.EXHAUSTIVE_SEARCH), audit=True)
print("search:     ", t.deletions, t.final_class.value, "every step isometric:", t.steps_isometric)
print("nibbles to zero?", nibbles_to_zero(g))

# Meshes. A triangulated strip with a hole cut out of it.
mask = rectangle(8, 20) - {(3, 8), (3, 9), (4, 8), (4, 9), (4, 10)}
spec = MeshSpec("tri", mask)
mg, coords = mesh_graph(spec)
print(f"mesh: {mg.n} points, {mg.num_edges()} edges")

# Distance by nibbling everything except the two endpoints away
inner = sorted(p for p in coords if is_interior(spec, p))
s, t = inner[0], inner[-1]
idx = {p: i for i, p in enumerate(coords)}
print(s, "to", t, "nibbled distance", mesh_distance_query(spec, s, t), "BFS", bfs_distance(mg, idx[s], idx[t]))

# Hexagonal cells have no redundant vertex to start from
hexes = MeshSpec("hex", rectangle(3, 4))
print("hex mesh:", nibble(mesh_graph(hexes)[0]).final_class.value)

"""
Plane digraphs as rotation systems
==================================

A walk through building a small embedding, tracing its faces and checking
Euler's formula.  Run with ``python notebooks/01_embeddings.py``.
"""

# %%
from planar_detours import bfs_layers, build_plane_graph, emit_pdg, layered_subgraph
from planar_detours.generate import plane_graph_from_points
from planar_detours.plane_graph import euler_characteristic, satisfies_euler

# %% [markdown]
# Four points and five arcs.  The rotation at each vertex lists the incident
# arcs anti-clockwise; ``plane_graph_from_points`` sorts them by angle.

# %%
pts = [(0, 0), (1, 1), (1, -1), (2, 0)]
g = plane_graph_from_points(pts, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)])
print("rotations:", g.rotations)
for f in g.faces:
    print(f"face {f.id}: {f.vertices} simple={f.is_simple}")
print("V - E + F =", euler_characteristic(g), "ok:", satisfies_euler(g))

# %% [markdown]
# The same graph written by hand.  Dart ``2a`` leaves the tail of arc ``a``
# and dart ``2a + 1`` leaves its head.

# %%
h = build_plane_graph(4, g.arcs, g.rotations)
assert h == g
print(emit_pdg(h))

# %% [markdown]
# BFS layers from vertex 0 and the subgraph kept from layer 1 onwards.

# %%
layers = bfs_layers(g, 0)
print("layers:", layers.layers)
sub = layered_subgraph(g, layers, 1, 3)
print("kept vertices:", sub.to_old, "arcs:", sub.graph.arcs)
print("faces after deletion:", len(sub.graph.faces))

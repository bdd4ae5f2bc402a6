"""
Leftmost paths, cuts and areas
==============================

Extremal paths between two vertices on the outer face, and what happens when
the graph is cut open along one of them.
"""

# %%
from planar_detours import Side, cut_along_path, extremal_path, left_area_vertices, simplify_outer
from planar_detours.generate import plane_graph_from_points

# %% [markdown]
# Three parallel routes from v=0 to w=4: over the top, through the middle
# and along the bottom.

# %%
pts = [(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (1.0, -1.0), (2.0, 0.0)]
g = plane_graph_from_points(pts, [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)])
outer = next(f.id for f in g.faces if f.vertex_set == {0, 1, 3, 4})
left = extremal_path(g, outer, 0, 4, Side.LEFT)
right = extremal_path(g, outer, 0, 4, Side.RIGHT)
print("leftmost: ", left.vertices)
print("rightmost:", right.vertices)
print("middle avoiding the top:", extremal_path(g, outer, 0, 4, Side.LEFT, allowed={0, 2, 3, 4}).vertices)

# %% [markdown]
# The left area of a path is the part of the graph between it and the
# leftmost path.  It grows as the path moves right.

# %%
for vs in ([0, 1, 4], [0, 2, 4], [0, 3, 4]):
    path = extremal_path(g, outer, 0, 4, Side.LEFT, allowed=set(vs))
    left_part, right_part = left_area_vertices(g, outer, path)
    print(vs, "left area:", sorted(left_part), "right area:", sorted(right_part))

# %% [markdown]
# Simplification wraps two new arcs u->v around the graph so that the outer
# face becomes a digon.

# %%
simp = simplify_outer(g, outer, 0, 4)
print("arcs before/after:", g.arc_count, simp.graph.arc_count)
print("new outer face:", simp.graph.faces[simp.graph.outer_face].vertices)

# %% [markdown]
# Cutting along a path that leaves the outer face and stops inside splits
# its vertices into copies.  ``lineage`` maps every vertex of the cut graph
# back to the original.

# %%
into_middle = extremal_path(g, outer, 0, 2, Side.LEFT)
cut = cut_along_path(g, outer, into_middle)
print("vertices:", g.vertex_count, "->", cut.graph.vertex_count)
print("lineage:", cut.lineage)
print("new boundary:", sorted(cut.new_boundary))

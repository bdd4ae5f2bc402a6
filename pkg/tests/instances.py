"""Small hand-built and seeded instances shared by the test modules."""

from __future__ import annotations

import math

from hypothesis import strategies as st

from planar_detours import GeneratorSpec, build_plane_graph, delaunay_instance, generate_instance
from planar_detours.errors import EmptyAfterThinning
from planar_detours.generate import Instance, plane_graph_from_points
from planar_detours.plane_graph import bfs_layers

# s=0, 1 above, 2 below, t=3; the chord 1->2 makes the only detour
DIAMOND_POINTS = [(0.0, 0.0), (1.0, 1.0), (1.0, -1.0), (2.0, 0.0)]
DIAMOND_ARCS = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)]


def diamond():
    return plane_graph_from_points(DIAMOND_POINTS, DIAMOND_ARCS)


def triangle():
    return build_plane_graph(3, [(0, 1), (1, 2), (2, 0)], [(0, 2), (0, 1), (1, 2)])


def path_graph(n=3):
    return plane_graph_from_points([(float(i), 0.0) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def grid(rows, cols, orient="right-down"):
    return generate_instance(GeneratorSpec("grid", rows, cols, orient, 1.0, 0))


def chained_diamonds(count=2):
    """``count`` diamonds glued tip to tip; s = 0, t = the last tip."""
    points, arcs = [(0.0, 0.0)], []
    for i in range(count):
        base = 3 * i
        x = 2.0 * i
        points += [(x + 1, 1.0), (x + 1, -1.0), (x + 2, 0.0)]
        top, bottom, tip = base + 1, base + 2, base + 3
        arcs += [(base, top), (base, bottom), (top, tip), (bottom, tip), (top, bottom)]
    return plane_graph_from_points(points, arcs), 0, 3 * count


def bypass(length, chords=()):
    """Arc s=0 -> t=1 plus a second route of ``length`` arcs around a circle."""
    n = length + 1
    pts = [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)]
    route = [0] + list(range(2, n)) + [1]
    arcs = [(0, 1)] + list(zip(route, route[1:])) + list(chords)
    return plane_graph_from_points(pts, arcs), 0, 1


def fanned_paths():
    """v=0 on the left, w=4 on the right, three routes through 1 (top), 2, 3 (bottom)."""
    pts = [(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (1.0, -1.0), (2.0, 0.0)]
    arcs = [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)]
    return plane_graph_from_points(pts, arcs)


def with_reachable_target(inst: Instance) -> Instance:
    """Keep the suggested terminals when t is reachable, else aim at a farthest vertex."""
    layers = bfs_layers(inst.graph, inst.s)
    if layers.reachable(inst.t) and inst.t != inst.s:
        return inst
    far = max(range(inst.graph.vertex_count), key=lambda v: (layers.layer_of[v], -v))
    return Instance(inst.graph, inst.s, far, inst.coords)


def thinned_grids(count, max_vertices=12, seed0=0):
    """Seeded thinned grids, orientations cycling through all three policies."""
    shapes = [(3, 4), (3, 3), (2, 5), (2, 6), (4, 3)]
    orients = ["right-down", "random", "bidirected"]
    out, seed = [], seed0
    while len(out) < count:
        r, c = shapes[seed % len(shapes)]
        spec = GeneratorSpec("thinned-grid", r, c, orients[seed % 3], 0.75, seed)
        seed += 1
        try:
            inst = generate_instance(spec)
        except EmptyAfterThinning:
            continue
        if inst.graph.vertex_count <= max_vertices and inst.graph.vertex_count >= 2:
            out.append(with_reachable_target(inst))
    return out


def mixed_small(count, max_vertices=10, seed0=0):
    """Thinned grids, Delaunay triangulations and bypass graphs, all within ``max_vertices``."""
    out, seed = [], seed0
    while len(out) < count:
        kind = seed % 4
        try:
            if kind == 0:
                spec = GeneratorSpec("thinned-grid", 3, 3, ["random", "bidirected", "right-down"][seed % 3], 0.8, seed)
                inst = generate_instance(spec)
            elif kind in (1, 2):
                inst = delaunay_instance(5 + seed % (max_vertices - 4), ["random", "bidirected"][seed % 2], 0.75, seed)
            else:
                length = 2 + seed % (max_vertices - 2)
                g, s, t = bypass(length)
                inst = Instance(g, s, t, ())
        except EmptyAfterThinning:
            seed += 1
            continue
        seed += 1
        if 2 <= inst.graph.vertex_count <= max_vertices:
            out.append(with_reachable_target(inst))
    return out


@st.composite
def small_instances(draw, max_n=9):
    """Hypothesis strategy over seeded Delaunay and thinned-grid instances."""
    seed = draw(st.integers(0, 10**6))
    if draw(st.booleans()):
        n = draw(st.integers(3, max_n))
        orient = draw(st.sampled_from(["random", "bidirected"]))
        keep = draw(st.sampled_from([0.6, 0.8, 1.0]))
        try:
            inst = delaunay_instance(n, orient, keep, seed)
        except EmptyAfterThinning:
            inst = delaunay_instance(n, orient, 1.0, seed)
    else:
        rows = draw(st.integers(1, 3))
        cols = draw(st.integers(2, 3))
        orient = draw(st.sampled_from(["right-down", "random", "bidirected"]))
        try:
            inst = generate_instance(GeneratorSpec("thinned-grid", rows, cols, orient, 0.8, seed))
        except EmptyAfterThinning:
            inst = generate_instance(GeneratorSpec("grid", rows, cols, orient, 1.0, seed))
    return with_reachable_target(inst)

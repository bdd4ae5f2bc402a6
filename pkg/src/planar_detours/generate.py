"""Seeded instance generators.

All generators produce straight-line drawings and read the rotation system
off the geometry, so their output is plane by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple, Sequence

import numpy as np

from .errors import EmptyAfterThinning
from .plane_graph import PlaneGraph, induced_subgraph, weak_component

Orientation = Literal["right-down", "random", "bidirected"]


def plane_graph_from_points(
    points: Sequence[tuple[float, float]], arcs: Sequence[tuple[int, int]]
) -> PlaneGraph:
    """Rotation system of a straight-line drawing.

    Arcs joining the same pair of vertices are fanned out in a consistent
    order, as if drawn as nearby parallel curves.
    """
    n = len(points)
    incident: list[list[tuple[float, int, int]]] = [[] for _ in range(n)]
    for a, (t, h) in enumerate(arcs):
        for u, v in ((t, h), (h, t)):
            ang = math.atan2(points[v][1] - points[u][1], points[v][0] - points[u][0])
            rank = a if u < v else -a
            incident[u].append((ang, rank, a))
    rotations = [tuple(a for _, _, a in sorted(inc)) for inc in incident]
    return PlaneGraph(
        vertex_count=n,
        arcs=tuple((int(t), int(h)) for t, h in arcs),
        rotations=tuple(rotations),
    )


@dataclass(frozen=True)
class GeneratorSpec:
    kind: Literal["grid", "thinned-grid"] = "grid"
    rows: int = 3
    cols: int = 3
    orient: Orientation = "right-down"
    keep: float = 1.0
    seed: int = 0


class Instance(NamedTuple):
    graph: PlaneGraph
    s: int
    t: int
    coords: tuple[tuple[float, float], ...]


def _orient(edges, orient: str, rng: np.random.Generator) -> list[tuple[int, int]]:
    arcs = []
    for u, v in edges:
        if orient == "right-down":
            arcs.append((u, v))
        elif orient == "random":
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
        elif orient == "bidirected":
            arcs += [(u, v), (v, u)]
        else:
            raise ValueError(f"unknown orientation {orient!r}")
    return arcs


def _finish(
    points: list[tuple[float, float]],
    arcs: list[tuple[int, int]],
    keep: float,
    rng: np.random.Generator,
    anchor: int,
) -> tuple[PlaneGraph, tuple[int, ...]]:
    if keep < 1.0:
        mask = rng.random(len(arcs)) < keep
        arcs = [a for a, m in zip(arcs, mask) if m]
    g = plane_graph_from_points(points, arcs)
    comp = weak_component(g, anchor)
    if len(comp) < 2:
        raise EmptyAfterThinning("no arc survives next to the anchor vertex")
    sub = induced_subgraph(g, comp)
    return sub.graph, sub.to_old


def generate_instance(spec: GeneratorSpec) -> Instance:
    """Grid digraph, optionally thinned, with suggested terminals.

    Vertex ``r * cols + c`` sits at row ``r``, column ``c``.  The instance is
    the weak component of the bottom-right corner; ``t`` is that corner and
    ``s`` the top-left-most vertex of the component.

    Raises:
        EmptyAfterThinning: the bottom-right corner lost all its arcs.
    """
    if spec.rows < 1 or spec.cols < 1:
        raise ValueError("rows and cols must be positive")
    if spec.kind not in ("grid", "thinned-grid"):
        raise ValueError(f"unknown kind {spec.kind!r}")
    keep = 1.0 if spec.kind == "grid" else spec.keep
    rng = np.random.default_rng(spec.seed)
    R, C = spec.rows, spec.cols
    points = [(float(c), float(-r)) for r in range(R) for c in range(C)]
    edges = []
    for r in range(R):
        for c in range(C):
            v = r * C + c
            if c + 1 < C:
                edges.append((v, v + 1))
            if r + 1 < R:
                edges.append((v, v + C))
    arcs = _orient(edges, spec.orient, rng)
    g, to_old = _finish(points, arcs, keep, rng, R * C - 1)
    coords = tuple(points[v] for v in to_old)
    t = g.vertex_count - 1
    s = min(range(g.vertex_count), key=lambda v: (-coords[v][1] + coords[v][0], -coords[v][1]))
    return Instance(g, s, t, coords)


def delaunay_instance(
    n: int, orient: Orientation = "random", keep: float = 1.0, seed: int = 0
) -> Instance:
    """Thinned Delaunay triangulation of ``n`` random points in the unit square.

    The instance is the weak component of vertex 0; ``s`` and ``t`` are the
    leftmost and rightmost points of that component.
    """
    from scipy.spatial import Delaunay

    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    edges: set[tuple[int, int]] = set()
    if n == 2:
        edges.add((0, 1))
    elif n >= 3:
        for simplex in Delaunay(pts).simplices:
            for i in range(3):
                u, v = sorted((int(simplex[i]), int(simplex[(i + 1) % 3])))
                edges.add((u, v))
    points = [(float(x), float(y)) for x, y in pts]
    arcs = _orient(sorted(edges), orient, rng)
    g, to_old = _finish(points, arcs, keep, rng, 0)
    coords = tuple(points[v] for v in to_old)
    s = min(range(g.vertex_count), key=lambda v: coords[v][0])
    t = max(range(g.vertex_count), key=lambda v: coords[v][0])
    return Instance(g, s, t, coords)

"""Quadratic-time search for a non-shortest s->t path in a plane digraph.

For every candidate ``y`` (the second vertex of the detour in its layer) the
layers before ``y`` are deleted, a super-source is attached to the rest of
the layer, and the resulting two-paths instance with three terminals on one
face is solved greedily with extremal paths.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import NoCommonFace, TUnreachable
from .grounded import GroundedPath, Side, extremal_path, simplify_outer
from .plane_graph import (
    UNREACHABLE,
    BfsLayers,
    PlaneGraph,
    Subgraph,
    bfs_layers,
    directed_path,
    layered_subgraph,
)
from .verify import verify_witness

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DetourWitness:
    """A verified simple s->t path and the distance it beats."""

    path: tuple[int, ...]
    length: int
    baseline: int
    method: str = "greedy"

    @property
    def excess(self) -> int:
        return self.length - self.baseline


class SuperSource(NamedTuple):
    graph: PlaneGraph
    x_star: int


class TwoPaths(NamedTuple):
    p1: GroundedPath
    p2: GroundedPath


def layer_face(g: PlaneGraph, layer: Sequence[int]) -> int:
    """Id of a face whose boundary carries every vertex of ``layer``."""
    found = g.faces_containing(layer)
    if not found:
        raise NoCommonFace(f"no face of the layered graph carries all of {sorted(layer)}")
    return found[0]


def add_super_source(
    g: PlaneGraph, layer: Sequence[int], y: int, face: int | None = None
) -> SuperSource:
    """Attach a fresh vertex with arcs into every vertex of ``layer`` except ``y``.

    The new vertex is drawn inside a face carrying the whole layer; its arcs
    land at the first corner of each target along that face's walk.  The
    returned graph elects a face containing both the new vertex and ``y`` as
    its outer face (the layer face itself when no arc is added).
    """
    if not set(layer) - {y}:
        # nothing to attach: x* stays isolated and the instance is infeasible
        h = PlaneGraph(
            vertex_count=g.vertex_count + 1,
            arcs=g.arcs,
            rotations=g.rotations + ((),),
        )
        return SuperSource(h if g.outer_face is None else h.with_outer(g.outer_face), g.vertex_count)
    if face is None:
        face = layer_face(g, layer)
    walk = g.faces[face]
    if not set(layer) <= walk.vertex_set:
        raise NoCommonFace(f"face {face} does not carry the whole layer")
    first_corner: dict[int, int] = {}
    for i, v in enumerate(walk.vertices):
        first_corner.setdefault(v, i)
    targets = sorted((u for u in set(layer) if u != y), key=first_corner.__getitem__)

    x_star = g.vertex_count
    base = g.arc_count
    rotations = [list(r) for r in g.rotations]
    for j, u in enumerate(targets):
        d = walk.darts[first_corner[u]]
        r = rotations[u]
        i = r.index(d >> 1)
        r[i:i] = [base + j]
    # walking the face, the arcs to later corners come first anti-clockwise
    rotations.append([base + j for j in reversed(range(len(targets)))])
    h = PlaneGraph(
        vertex_count=g.vertex_count + 1,
        arcs=g.arcs + tuple((x_star, u) for u in targets),
        rotations=tuple(tuple(r) for r in rotations),
    )
    shared = h.faces_containing((x_star, y))
    if not shared:
        raise NoCommonFace("the super-source does not share a face with y")
    return SuperSource(h.with_outer(shared[0]), x_star)


def one_face_two_paths(h: PlaneGraph, x: int, y: int, t: int) -> TwoPaths | None:
    """Internally disjoint x->y and y->t paths, with x and y on the outer face.

    After the (y, x)-simplification the outer face is simple, and one of the
    leftmost or rightmost x->y paths can always serve as the first path of a
    solution; the second is then found by plain reachability.
    """
    if x == y:
        raise ValueError("x and y must differ")
    simplified = simplify_outer(h, h.outer_face, y, x).graph
    outer = simplified.outer_face
    for side in (Side.LEFT, Side.RIGHT):
        p1 = extremal_path(simplified, outer, x, y, side)
        if p1 is None:
            return None
        blocked = set(p1.vertices)
        blocked.discard(y)
        found = directed_path(simplified, y, t, blocked)
        if found is not None:
            p2 = GroundedPath(tuple(found[0]), tuple(found[1]))
            assert all(a < h.arc_count for a in p1.arcs + p2.arcs)
            return TwoPaths(p1, p2)
    return None


def _layer_context(
    g: PlaneGraph, layers: BfsLayers, p: int, t: int
) -> tuple[Subgraph, list[int], int] | None:
    sub = layered_subgraph(g, layers, p, t)
    local = [sub.to_new[u] for u in layers.layers[p] if u in sub.to_new]
    if len(local) < 2:
        return None
    return sub, local, layer_face(sub.graph, local)


def _try_candidate(
    g: PlaneGraph, layers: BfsLayers, t: int, y: int, ctx: tuple[Subgraph, list[int], int]
) -> list[int] | None:
    sub, local, face = ctx
    if y not in sub.to_new:
        return None
    ss = add_super_source(sub.graph, local, sub.to_new[y], face)
    pair = one_face_two_paths(ss.graph, ss.x_star, sub.to_new[y], sub.to_new[t])
    if pair is None:
        return None
    mid = [sub.to_old[v] for v in pair.p1.vertices[1:]]
    end = [sub.to_old[v] for v in pair.p2.vertices]
    start = layers.shortest_path(g, mid[0])
    return start + mid[1:] + end[1:]


def _candidates(layers: BfsLayers, t: int) -> list[int]:
    dist_t = layers.layer_of[t]
    return [
        y
        for y, lay in enumerate(layers.layer_of)
        if lay != UNREACHABLE and 1 <= lay <= dist_t
    ]


def _solve_chunk(args: tuple[PlaneGraph, BfsLayers, int, list[int]]) -> tuple[int, list[int]] | None:
    g, layers, t, ys = args
    contexts: dict[int, tuple | None] = {}
    for y in ys:
        p = layers.layer_of[y]
        if p not in contexts:
            contexts[p] = _layer_context(g, layers, p, t)
        if contexts[p] is None:
            continue
        path = _try_candidate(g, layers, t, y, contexts[p])
        if path is not None:
            return y, path
    return None


def directed_detour(
    g: PlaneGraph, s: int, t: int, jobs: int = 1
) -> DetourWitness | None:
    """Find a simple s->t path longer than dist(s, t), or None if none exists.

    ``s == t`` is answered with None.  Candidates are tried in increasing
    vertex order and the lowest successful ``y`` wins, also with ``jobs > 1``.

    Raises:
        TUnreachable: t cannot be reached from s.
    """
    for v in (s, t):
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"{v} is not a vertex")
    if s == t:
        return None
    layers = bfs_layers(g, s)
    if not layers.reachable(t):
        raise TUnreachable(f"t={t} is unreachable from s={s}")
    ys = _candidates(layers, t)

    if jobs <= 1:
        hit = _solve_chunk((g, layers, t, ys))
    else:
        hit = None
        batch = max(1, len(ys) // (4 * jobs))
        chunks = [ys[i : i + batch] for i in range(0, len(ys), batch)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for start in range(0, len(chunks), jobs):
                wave = chunks[start : start + jobs]
                results = list(pool.map(_solve_chunk, [(g, layers, t, c) for c in wave]))
                found = [r for r in results if r is not None]
                if found:
                    hit = min(found)
                    break
    if hit is None:
        return None
    y, path = hit
    check = verify_witness(g, s, t, 1, path)
    if not check:
        raise AssertionError(f"internal error, witness for y={y} fails: {check.report}")
    log.debug("detour found through y=%d", y)
    base = layers.layer_of[t]
    return DetourWitness(tuple(path), len(path) - 1, base)

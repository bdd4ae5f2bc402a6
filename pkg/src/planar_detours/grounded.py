"""Grounded paths: extremal paths, outer-face simplification, cutting, areas.

Everything here assumes the elected outer face is simple unless stated
otherwise.  Paths carry arc ids next to their vertices so that parallel arcs
(introduced by simplification) stay distinguishable.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Callable, Collection, NamedTuple, Sequence, Union

from .errors import (
    NotGrounded,
    NotOnOuterFace,
    OuterFaceNotSimple,
    PathTouchesBoundary,
)
from .plane_graph import Face, PlaneGraph

Allowed = Union[Callable[[int], bool], Collection[int], None]


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    def mirror(self) -> Side:
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True)
class GroundedPath:
    vertices: tuple[int, ...]
    arcs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a path has at least one vertex")
        if len(self.arcs) != len(self.vertices) - 1:
            raise ValueError("a path needs exactly one arc per step")

    @property
    def length(self) -> int:
        return len(self.arcs)

    @property
    def origin(self) -> int:
        return self.vertices[0]

    @property
    def destination(self) -> int:
        return self.vertices[-1]

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def is_valid_in(self, g: PlaneGraph) -> bool:
        return self.is_simple() and all(
            g.arcs[a] == (u, v) for a, u, v in zip(self.arcs, self.vertices, self.vertices[1:])
        )

    def __add__(self, other: GroundedPath) -> GroundedPath:
        if self.destination != other.origin:
            raise ValueError("paths do not meet")
        return GroundedPath(self.vertices + other.vertices[1:], self.arcs + other.arcs)


def path_from_vertices(g: PlaneGraph, vertices: Sequence[int]) -> GroundedPath:
    """Attach arc ids to a vertex sequence, taking the first matching arc per step."""
    arcs = []
    for u, v in zip(vertices, vertices[1:]):
        for a in g.rotations[u]:
            if g.arcs[a] == (u, v):
                arcs.append(a)
                break
        else:
            raise ValueError(f"no arc {u}->{v}")
    return GroundedPath(tuple(vertices), tuple(arcs))


def _simple_outer(g: PlaneGraph, outer: int | None) -> Face:
    if outer is None:
        outer = g.outer_face
    if outer is None:
        raise ValueError("no outer face elected")
    face = g.faces[outer]
    if not face.is_simple:
        raise OuterFaceNotSimple(f"outer face {outer} is not simple")
    return face


def _as_predicate(allowed: Allowed) -> Callable[[int], bool] | None:
    if allowed is None or callable(allowed):
        return allowed
    members = allowed
    return lambda v: v in members


# -- simplification ------------------------------------------------------


class Simplified(NamedTuple):
    graph: PlaneGraph
    f1: int
    f2: int


def simplify_outer(g: PlaneGraph, outer: int | None, u: int, v: int) -> Simplified:
    """The (u, v)-simplification: two new u->v arcs wrapped around the graph.

    The new arcs are embedded in the old outer face (which need not be simple)
    at the first corner of ``u`` and of ``v`` along its boundary walk.  The
    returned graph has the digon bounded by ``f1`` and ``f2`` elected as its
    outer face.

    Raises:
        NotOnOuterFace: ``u == v`` or either vertex misses the outer face.
    """
    if outer is None:
        outer = g.outer_face
    if outer is None:
        raise ValueError("no outer face elected")
    if u == v:
        raise NotOnOuterFace("simplification needs two distinct vertices")
    face = g.faces[outer]
    if u not in face.vertex_set or v not in face.vertex_set:
        raise NotOnOuterFace(f"vertices {u}, {v} must both lie on face {outer}")
    du = g.corner_dart(outer, u)
    dv = g.corner_dart(outer, v)
    f1, f2 = g.arc_count, g.arc_count + 1
    rotations = [list(r) for r in g.rotations]
    # at u: f1, f2 just before the outgoing face dart; at v: f2, f1
    ru = rotations[u]
    i = g.dart_position[du]
    ru[i:i] = [f1, f2]
    rv = rotations[v]
    j = g.dart_position[dv]
    rv[j:j] = [f2, f1]
    h = PlaneGraph(
        vertex_count=g.vertex_count,
        arcs=g.arcs + ((u, v), (u, v)),
        rotations=tuple(tuple(r) for r in rotations),
    )
    digon = h.face_of_dart[h.dart_at(f2, u)]
    assert len(h.faces[digon]) == 2
    return Simplified(h.with_outer(digon), f1, f2)


# -- extremal paths ------------------------------------------------------


class ExtremalTree(NamedTuple):
    """Parent arcs of an ordered DFS; ``order`` is the visiting order."""

    root: int
    parent_arc: dict[int, int]
    order: list[int]

    def path_to(self, g: PlaneGraph, w: int) -> GroundedPath | None:
        if w not in self.parent_arc:
            return None
        verts = [w]
        arcs = []
        while verts[-1] != self.root:
            a = self.parent_arc[verts[-1]]
            arcs.append(a)
            verts.append(g.arcs[a][0])
        verts.reverse()
        arcs.reverse()
        return GroundedPath(tuple(verts), tuple(arcs))

    def depth(self, g: PlaneGraph, w: int) -> int:
        d = 0
        while w != self.root:
            w = g.arcs[self.parent_arc[w]][0]
            d += 1
        return d


def extremal_tree(
    g: PlaneGraph,
    outer: int | None,
    v: int,
    side: Side = Side.LEFT,
    allowed: Allowed = None,
) -> ExtremalTree:
    """Depth-first search from ``v`` trying out-arcs from left to right.

    At a vertex entered through arc ``pq`` the out-arcs are tried clockwise
    from ``pq`` (LEFT) or anti-clockwise (RIGHT).  At the root the reference
    is the outer-face corner of ``v``, standing in for an extra arc attached
    from outside the outer face.  The tree path to any vertex is the extremal
    path to it among paths through allowed vertices.
    """
    face = _simple_outer(g, outer)
    if v not in face.vertex_set:
        raise NotOnOuterFace(f"vertex {v} is not on the outer face")
    ok = _as_predicate(allowed)
    parent: dict[int, int] = {}
    order: list[int] = []
    if ok is not None and not ok(v):
        return ExtremalTree(v, parent, order)

    rot = g.rotation_darts
    pos = g.dart_position
    arcs = g.arcs
    step = -1 if side is Side.LEFT else 1
    b = g.corner_dart(face.id, v)
    parent[v] = -1
    order.append(v)
    stack = [[v, pos[b] - 1 if side is Side.LEFT else pos[b], len(rot[v])]]
    while stack:
        top = stack[-1]
        q, idx, remaining = top
        if remaining == 0:
            stack.pop()
            continue
        r = rot[q]
        d = r[idx % len(r)]
        top[1] = idx + step
        top[2] = remaining - 1
        if d & 1:
            continue
        w = arcs[d >> 1][1]
        if w in parent or (ok is not None and not ok(w)):
            continue
        parent[w] = d >> 1
        order.append(w)
        stack.append([w, pos[d ^ 1] + step, len(rot[w]) - 1])
    return ExtremalTree(v, parent, order)


def extremal_path(
    g: PlaneGraph,
    outer: int | None,
    v: int,
    w: int,
    side: Side = Side.LEFT,
    allowed: Allowed = None,
) -> GroundedPath | None:
    """Leftmost (or rightmost) ``v -> w`` path through allowed vertices.

    Returns None when ``w`` cannot be reached.
    """
    return extremal_tree(g, outer, v, side, allowed).path_to(g, w)


# -- cutting -------------------------------------------------------------


@dataclass(frozen=True)
class CutResult:
    """Outcome of cutting a plane graph along a grounded path.

    ``lineage[v]`` names the vertex of the input graph that ``v`` descends
    from; ``arc_lineage`` does the same for arcs.  ``new_boundary`` is the set
    of split copies created by the cut.
    """

    graph: PlaneGraph
    new_boundary: frozenset[int]
    lineage: tuple[int, ...]
    arc_lineage: tuple[int, ...]
    to_new: dict[int, int]

    @property
    def outer_face(self) -> int:
        assert self.graph.outer_face is not None
        return self.graph.outer_face


def cut_along_arc(g: PlaneGraph, outer: int | None, arc: int) -> CutResult:
    t, h = g.arcs[arc]
    face = _simple_outer(g, outer)
    start = t if t in face.vertex_set else h
    other = h if start == t else t
    if other in face.vertex_set:
        raise PathTouchesBoundary("both endpoints of the arc lie on the outer face")
    if start != t:
        raise NotImplementedError("cutting against the arc direction is not needed")
    return cut_along_path(g, outer, GroundedPath((t, h), (arc,)))


def cut_along_path(g: PlaneGraph, outer: int | None, path: GroundedPath) -> CutResult:
    """Cut the graph open along ``path``, one arc at a time, in order.

    Each step removes the current path vertex ``u`` (on the outer face) and
    replaces it with two copies: one inherits the arcs from the outer corner
    anti-clockwise up to the cut arc, the other the rest; the cut arc itself
    is doubled.  The destination of the path ends up on the new outer face.

    Raises:
        NotOnOuterFace: the origin is not on the outer face.
        PathTouchesBoundary: a later path vertex lies on the outer face.
    """
    face = _simple_outer(g, outer)
    if path.length == 0:
        raise ValueError("cannot cut along an empty path")
    if not path.is_valid_in(g):
        raise ValueError("path is not a simple path of the graph")
    on_face = face.vertex_set
    if path.origin not in on_face:
        raise NotOnOuterFace(f"path origin {path.origin} is not on the outer face")
    if any(x in on_face for x in path.vertices[1:]):
        raise PathTouchesBoundary("path meets the outer face after its origin")

    n = g.vertex_count
    arcs = [list(a) for a in g.arcs]
    arc_lineage = list(range(g.arc_count))
    rot: dict[int, list[int]] = {v: list(r) for v, r in enumerate(g.rotations)}
    lineage = list(range(n))
    new_ids: list[int] = []
    start_arc = g.corner_dart(face.id, path.origin) >> 1
    anchor_arc = start_arc

    for u, e in zip(path.vertices, path.arcs):
        w = arcs[e][1]
        r = rot.pop(u)
        j = r.index(start_arc)
        r = r[j:] + r[:j]
        ell = r.index(e)
        assert 0 < ell < len(r) - 1, "cut arc must not be an outer-face arc"
        u1, u2 = len(lineage), len(lineage) + 1
        lineage += [lineage[u], lineage[u]]
        new_ids += [u1, u2]
        e2 = len(arcs)
        arcs.append(list(arcs[e]))
        arc_lineage.append(arc_lineage[e])
        rot[u1] = r[: ell + 1]
        rot[u2] = [e2] + r[ell + 1 :]
        for copy, group in ((u1, rot[u1]), (u2, rot[u2])):
            for a in group:
                ends = arcs[a]
                if ends[0] == u:
                    ends[0] = copy
                else:
                    ends[1] = copy
        rw = rot[w]
        k = rw.index(e)
        rw[k : k + 1] = [e2, e]
        start_arc = e

    survivors = [v for v in range(len(lineage)) if v in rot]
    renum = {v: i for i, v in enumerate(survivors)}
    cut = PlaneGraph(
        vertex_count=len(survivors),
        arcs=tuple((renum[t], renum[h]) for t, h in arcs),
        rotations=tuple(tuple(rot[v]) for v in survivors),
    )
    first_copy = renum[new_ids[0]]
    outer_new = cut.face_of_dart[cut.dart_at(anchor_arc, first_copy)]
    cut = cut.with_outer(outer_new)
    return CutResult(
        graph=cut,
        new_boundary=frozenset(renum[v] for v in new_ids),
        lineage=tuple(lineage[v] for v in survivors),
        arc_lineage=tuple(arc_lineage),
        to_new={v: renum[v] for v in range(n) if v in renum},
    )


# -- areas ---------------------------------------------------------------


def _boundary_segment(g: PlaneGraph, face: Face, start: int, stop: int) -> list[int]:
    """Darts of the face walk from vertex ``start`` up to vertex ``stop``."""
    darts = face.darts
    i = face.vertices.index(start)
    seg = []
    while face.vertices[i] != stop:
        seg.append(darts[i])
        i = (i + 1) % len(darts)
    return seg


def _winding_numbers(g: PlaneGraph, outer: int, walk: list[int]) -> list[int]:
    """Winding number of a closed dart walk around every face.

    The outer face gets 0; crossing dart ``d`` from its own face (on its
    right) to the face on its left adds the net number of times the walk runs
    along ``d``.
    """
    net: dict[int, int] = {}
    for d in walk:
        net[d] = net.get(d, 0) + 1
        net[d ^ 1] = net.get(d ^ 1, 0) - 1
    owner = g.face_of_dart
    wind: list[int | None] = [None] * len(g.faces)
    wind[outer] = 0
    queue = deque([outer])
    while queue:
        f = queue.popleft()
        for d in g.faces[f].darts:
            nb = owner[d ^ 1]
            if wind[nb] is None:
                wind[nb] = wind[f] + net.get(d, 0)
                queue.append(nb)
    if any(w is None for w in wind):
        raise ValueError("area computation needs a connected graph")
    return wind  # type: ignore[return-value]


def left_area_faces(
    g: PlaneGraph, outer: int | None, path: GroundedPath
) -> tuple[frozenset[int], frozenset[int]]:
    """Ids of the faces inside the left and the right area of a doubly grounded path.

    The left area is bounded anti-clockwise by the path followed by the outer
    boundary from its destination back to its origin; the right area is
    bounded clockwise by the path and the opposite stretch of the boundary.

    Raises:
        NotGrounded: an endpoint of the path is not on the outer face.
    """
    face = _simple_outer(g, outer)
    v, w = path.origin, path.destination
    if v not in face.vertex_set or w not in face.vertex_set:
        raise NotGrounded("both ends of the path must lie on the outer face")
    if v == w:
        raise NotGrounded("a grounded path must join two distinct boundary vertices")
    forward = [2 * a for a in path.arcs]
    # the face walk runs anti-clockwise around the outer boundary
    ccw_back = _boundary_segment(g, face, w, v)
    cw_back = [d ^ 1 for d in reversed(_boundary_segment(g, face, v, w))]
    left = _winding_numbers(g, face.id, forward + ccw_back)
    right = _winding_numbers(g, face.id, forward + cw_back)
    return (
        frozenset(f for f, n in enumerate(left) if n > 0),
        frozenset(f for f, n in enumerate(right) if n < 0),
    )


def left_area_vertices(
    g: PlaneGraph, outer: int | None, path: GroundedPath
) -> tuple[set[int], set[int]]:
    """Vertex sets of the left and right areas of a doubly grounded path.

    Each area holds the path, its stretch of the outer boundary and every
    vertex of an enclosed face.

    Raises:
        NotGrounded: an endpoint of the path is not on the outer face.
    """
    left_faces, right_faces = left_area_faces(g, outer, path)
    face = g.faces[outer if outer is not None else g.outer_face]
    v, w = path.origin, path.destination
    base = set(path.vertices)
    left = base | {g.origin(d) for d in _boundary_segment(g, face, w, v)} | {v}
    right = base | {g.origin(d) for d in _boundary_segment(g, face, v, w)} | {w}
    for f in left_faces:
        left.update(g.faces[f].vertices)
    for f in right_faces:
        right.update(g.faces[f].vertices)
    return left, right

"""Embedded planar digraphs stored as rotation systems.

A :class:`PlaneGraph` keeps, for every vertex, the anti-clockwise cyclic order
of its incident arcs.  Faces are never stored; they are traced on demand from
the darts (half-arcs) of the graph.

Dart ``2*a`` starts at the tail of arc ``a``, dart ``2*a + 1`` at its head.
The face successor of a dart ``d`` is the anti-clockwise successor of
``rev(d)`` around the head of ``d``; with this convention every face orbit
keeps its face on the right-hand side, so the unbounded face of a connected
graph is walked anti-clockwise.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Collection, Iterable, NamedTuple, Sequence

from .errors import MalformedRotation, SelfLoop, VertexRemoved

UNREACHABLE = -1

# caches that depend only on the rotation system, not on the outer face
_SHARED_CACHES = (
    "rotation_darts", "dart_position", "successors", "predecessors", "faces", "face_of_dart",
)


def rev(dart: int) -> int:
    return dart ^ 1


def dart_arc(dart: int) -> int:
    return dart >> 1


@dataclass(frozen=True)
class Face:
    """One orbit of the face-successor permutation."""

    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]  # origin of each dart, in walk order
    is_simple: bool

    def __len__(self) -> int:
        return len(self.darts)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """A digraph together with a rotation system.

    Attributes:
        vertex_count: number of vertices, named ``0 .. vertex_count - 1``.
        arcs: ``(tail, head)`` per arc id.  Parallel arcs are allowed.
        rotations: per vertex, the incident arc ids in anti-clockwise order.
        outer_face: id of the face elected as the outer face, if any.
    """

    vertex_count: int
    arcs: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]
    outer_face: int | None = field(default=None)

    def __post_init__(self) -> None:
        _validate(self)

    # -- equality on content, ignoring caches ------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.arcs == other.arcs
            and self.rotations == other.rotations
            and self.outer_face == other.outer_face
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.arcs, self.rotations, self.outer_face))

    # -- basic accessors ---------------------------------------------------

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.arcs)

    def tail(self, arc: int) -> int:
        return self.arcs[arc][0]

    def head(self, arc: int) -> int:
        return self.arcs[arc][1]

    def origin(self, dart: int) -> int:
        return self.arcs[dart >> 1][dart & 1]

    def dart_at(self, arc: int, vertex: int) -> int:
        """The dart of ``arc`` whose origin is ``vertex``."""
        t, h = self.arcs[arc]
        if t == vertex:
            return 2 * arc
        if h == vertex:
            return 2 * arc + 1
        raise ValueError(f"arc {arc} is not incident to vertex {vertex}")

    def degree(self, vertex: int) -> int:
        return len(self.rotations[vertex])

    @cached_property
    def rotation_darts(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.dart_at(a, v) for a in rot) for v, rot in enumerate(self.rotations)
        )

    @cached_property
    def dart_position(self) -> list[int]:
        pos = [0] * self.dart_count
        for rot in self.rotation_darts:
            for i, d in enumerate(rot):
                pos[d] = i
        return pos

    def succ(self, dart: int) -> int:
        """Anti-clockwise successor of ``dart`` around its origin."""
        rot = self.rotation_darts[self.origin(dart)]
        return rot[(self.dart_position[dart] + 1) % len(rot)]

    def pred(self, dart: int) -> int:
        rot = self.rotation_darts[self.origin(dart)]
        return rot[self.dart_position[dart] - 1]

    def face_next(self, dart: int) -> int:
        return self.succ(dart ^ 1)

    def out_arcs(self, vertex: int) -> list[int]:
        return [a for a in self.rotations[vertex] if self.arcs[a][0] == vertex]

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for t, h in self.arcs:
            out[t].append(h)
        return tuple(tuple(x) for x in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for t, h in self.arcs:
            inc[h].append(t)
        return tuple(tuple(x) for x in inc)

    # -- faces -------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(trace_faces(self))

    @cached_property
    def face_of_dart(self) -> list[int]:
        owner = [0] * self.dart_count
        for face in self.faces:
            for d in face.darts:
                owner[d] = face.id
        return owner

    @property
    def outer(self) -> Face:
        if self.outer_face is None:
            raise ValueError("no outer face has been elected")
        return self.faces[self.outer_face]

    def with_outer(self, face_id: int | None) -> PlaneGraph:
        if face_id is not None and not 0 <= face_id < len(self.faces):
            raise ValueError(f"face {face_id} does not exist")
        clone = dataclasses.replace(self, outer_face=face_id)
        for name in _SHARED_CACHES:
            if name in self.__dict__:
                clone.__dict__[name] = self.__dict__[name]
        return clone

    def corner_dart(self, face_id: int, vertex: int) -> int:
        """First dart of the face walk leaving ``vertex``.

        The corner of the face at ``vertex`` sits between ``pred(d)`` and ``d``
        in the anti-clockwise rotation, where ``d`` is the returned dart.
        """
        face = self.faces[face_id]
        for d, v in zip(face.darts, face.vertices):
            if v == vertex:
                return d
        raise ValueError(f"vertex {vertex} is not on face {face_id}")

    def faces_containing(self, vertices: Iterable[int]) -> list[int]:
        wanted = set(vertices)
        return [f.id for f in self.faces if wanted <= f.vertex_set]


def _validate(g: PlaneGraph) -> None:
    n = g.vertex_count
    if n < 0:
        raise ValueError("vertex_count must be non-negative")
    if len(g.rotations) != n:
        raise MalformedRotation(f"expected {n} rotations, got {len(g.rotations)}")
    for a, (t, h) in enumerate(g.arcs):
        if not (0 <= t < n and 0 <= h < n):
            raise ValueError(f"arc {a} has an endpoint outside 0..{n - 1}")
        if t == h:
            raise SelfLoop(f"arc {a} is a self-loop at vertex {t}")
    seen: dict[tuple[int, int], int] = {}
    for v, rot in enumerate(g.rotations):
        for a in rot:
            if not 0 <= a < len(g.arcs):
                raise MalformedRotation(f"rotation of vertex {v} references unknown arc {a}")
            if v not in g.arcs[a]:
                raise MalformedRotation(f"arc {a} is not incident to vertex {v}")
            if (a, v) in seen:
                raise MalformedRotation(f"arc {a} appears twice in the rotation of vertex {v}")
            seen[(a, v)] = 1
    if len(seen) != 2 * len(g.arcs):
        for a, (t, h) in enumerate(g.arcs):
            for v in (t, h):
                if (a, v) not in seen:
                    raise MalformedRotation(f"arc {a} is missing from the rotation of vertex {v}")
    if g.outer_face is not None and g.outer_face < 0:
        raise ValueError("outer_face must be a face id")


def build_plane_graph(
    vertex_count: int,
    arcs: Sequence[Sequence[int]],
    rotations: Sequence[Sequence[int]],
    outer_face: int | None = None,
) -> PlaneGraph:
    """Validate and freeze a rotation system.

    Raises:
        SelfLoop: an arc has equal endpoints.
        MalformedRotation: an arc is missing from or repeated in the rotation
            of one of its endpoints, or a rotation names a foreign arc.
    """
    g = PlaneGraph(
        vertex_count=int(vertex_count),
        arcs=tuple((int(t), int(h)) for t, h in arcs),
        rotations=tuple(tuple(int(a) for a in rot) for rot in rotations),
    )
    if outer_face is not None:
        g = g.with_outer(outer_face)
    return g


def trace_faces(g: PlaneGraph) -> list[Face]:
    """Partition the darts into face orbits, in order of their smallest dart."""
    seen = [False] * g.dart_count
    faces: list[Face] = []
    for start in range(g.dart_count):
        if seen[start]:
            continue
        darts = []
        d = start
        while not seen[d]:
            seen[d] = True
            darts.append(d)
            d = g.face_next(d)
        verts = tuple(g.origin(x) for x in darts)
        faces.append(
            Face(
                id=len(faces),
                darts=tuple(darts),
                vertices=verts,
                is_simple=len(set(verts)) == len(verts),
            )
        )
    return faces


# -- connectivity --------------------------------------------------------


def weak_component(g: PlaneGraph, vertex: int, alive: Sequence[bool] | None = None) -> set[int]:
    comp = {vertex}
    queue = deque([vertex])
    while queue:
        v = queue.popleft()
        for a in g.rotations[v]:
            t, h = g.arcs[a]
            w = h if t == v else t
            if w not in comp and (alive is None or alive[w]):
                comp.add(w)
                queue.append(w)
    return comp


def weak_components(g: PlaneGraph) -> list[set[int]]:
    done = [False] * g.vertex_count
    comps = []
    for v in range(g.vertex_count):
        if not done[v]:
            comp = weak_component(g, v)
            for w in comp:
                done[w] = True
            comps.append(comp)
    return comps


def euler_characteristic(g: PlaneGraph) -> int:
    """``|V| - |E| + |F|`` with an isolated vertex counted as carrying one face."""
    isolated = sum(1 for rot in g.rotations if not rot)
    return g.vertex_count - g.arc_count + len(g.faces) + isolated


def satisfies_euler(g: PlaneGraph) -> bool:
    """Euler's formula summed over weak components (2 per component)."""
    return euler_characteristic(g) == 2 * len(weak_components(g))


# -- BFS layering --------------------------------------------------------


@dataclass(frozen=True)
class BfsLayers:
    """Directed BFS from ``source``.

    ``layer_of[v]`` is the distance from the source, or :data:`UNREACHABLE`.
    ``parent_arc[v]`` is the arc through which ``v`` was discovered (-1 for the
    source and for unreachable vertices).
    """

    source: int
    layer_of: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]
    parent_arc: tuple[int, ...]

    def dist(self, v: int) -> float:
        d = self.layer_of[v]
        return float("inf") if d == UNREACHABLE else d

    def reachable(self, v: int) -> bool:
        return self.layer_of[v] != UNREACHABLE

    def shortest_path(self, g: PlaneGraph, v: int) -> list[int]:
        """Vertices of the BFS-tree path from the source to ``v``."""
        if not self.reachable(v):
            raise ValueError(f"vertex {v} is unreachable from {self.source}")
        path = [v]
        while path[-1] != self.source:
            path.append(g.arcs[self.parent_arc[path[-1]]][0])
        path.reverse()
        return path


def bfs_layers(g: PlaneGraph, source: int) -> BfsLayers:
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} is not a vertex")
    layer = [UNREACHABLE] * g.vertex_count
    parent = [-1] * g.vertex_count
    layer[source] = 0
    order = [source]
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for a in g.rotations[v]:
            t, h = g.arcs[a]
            if t == v and layer[h] == UNREACHABLE:
                layer[h] = layer[v] + 1
                parent[h] = a
                order.append(h)
                queue.append(h)
    depth = layer[order[-1]]
    buckets: list[list[int]] = [[] for _ in range(depth + 1)]
    for v in order:
        buckets[layer[v]].append(v)
    return BfsLayers(
        source=source,
        layer_of=tuple(layer),
        layers=tuple(tuple(sorted(b)) for b in buckets),
        parent_arc=tuple(parent),
    )


# -- vertex deletion -----------------------------------------------------


class Subgraph(NamedTuple):
    """A subgraph with dense renumbering.

    ``to_old[new_vertex]`` and ``arc_to_old[new_arc]`` map back into the
    parent graph; ``to_new`` maps surviving parent vertices forward.
    """

    graph: PlaneGraph
    to_old: tuple[int, ...]
    to_new: dict[int, int]
    arc_to_old: tuple[int, ...]


def induced_subgraph(g: PlaneGraph, keep: Iterable[int]) -> Subgraph:
    """Delete every vertex outside ``keep``; rotations are filtered in place."""
    to_old = tuple(sorted(set(keep)))
    to_new = {v: i for i, v in enumerate(to_old)}
    arc_to_old = tuple(a for a, (t, h) in enumerate(g.arcs) if t in to_new and h in to_new)
    arc_new = {a: i for i, a in enumerate(arc_to_old)}
    sub = PlaneGraph(
        vertex_count=len(to_old),
        arcs=tuple((to_new[g.arcs[a][0]], to_new[g.arcs[a][1]]) for a in arc_to_old),
        rotations=tuple(
            tuple(arc_new[a] for a in g.rotations[v] if a in arc_new) for v in to_old
        ),
    )
    return Subgraph(sub, to_old, to_new, arc_to_old)


def layered_subgraph(g: PlaneGraph, layers: BfsLayers, p: int, keep_vertex: int) -> Subgraph:
    """Delete layers ``0 .. p-1`` and keep the weak component of ``keep_vertex``.

    Vertices unreachable from the BFS source belong to no finite layer and are
    never deleted.

    Raises:
        VertexRemoved: ``keep_vertex`` lies in a deleted layer.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    lay = layers.layer_of
    if lay[keep_vertex] != UNREACHABLE and lay[keep_vertex] < p:
        raise VertexRemoved(f"vertex {keep_vertex} lies in layer {lay[keep_vertex]} < {p}")
    alive = [lay[v] == UNREACHABLE or lay[v] >= p for v in range(g.vertex_count)]
    return induced_subgraph(g, weak_component(g, keep_vertex, alive))


def directed_path(
    g: PlaneGraph, src: int, dst: int, avoid: Collection[int] = ()
) -> tuple[list[int], list[int]] | None:
    """BFS for a ``src -> dst`` path whose vertices all lie outside ``avoid``.

    Returns ``(vertices, arcs)`` or None.
    """
    if src in avoid or dst in avoid:
        return None
    parent = {src: -1}
    queue = deque([src])
    while queue and dst not in parent:
        v = queue.popleft()
        for a in g.rotations[v]:
            t, h = g.arcs[a]
            if t == v and h not in parent and h not in avoid:
                parent[h] = a
                queue.append(h)
    if dst not in parent:
        return None
    verts, arcs = [dst], []
    while verts[-1] != src:
        a = parent[verts[-1]]
        arcs.append(a)
        verts.append(g.arcs[a][0])
    verts.reverse()
    arcs.reverse()
    return verts, arcs

"""Brute-force reference implementations used as ground truth in tests.

Nothing here is fast.  Every routine takes an explicit ``guard`` and raises
:class:`GuardTripped` instead of silently truncating its search.
"""

from __future__ import annotations

import enum
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import DifferentOrigins, GuardTripped, NotOnOuterFace, TUnreachable
from .grounded import GroundedPath
from .plane_graph import PlaneGraph

DEFAULT_GUARD = 10**6


class LexOrder(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    PREFIX = "prefix"  # the first path is a proper prefix of the second

    @property
    def is_less(self) -> bool:
        return self is not LexOrder.GREATER


def enumerate_simple_paths(
    g: PlaneGraph, s: int, t: int, guard: int = DEFAULT_GUARD
) -> list[GroundedPath]:
    """All simple directed s->t paths; parallel arcs give distinct paths."""
    if s == t:
        return [GroundedPath((s,), ())]
    found: list[GroundedPath] = []
    verts = [s]
    arcs: list[int] = []
    on_path = {s}
    steps = 0
    out = [g.out_arcs(v) for v in range(g.vertex_count)]

    def extend(v: int) -> None:
        nonlocal steps
        for a in out[v]:
            steps += 1
            if steps > 100 * guard:
                raise GuardTripped(f"more than {100 * guard} search steps")
            w = g.arcs[a][1]
            if w in on_path:
                continue
            verts.append(w)
            arcs.append(a)
            if w == t:
                found.append(GroundedPath(tuple(verts), tuple(arcs)))
                if len(found) > guard:
                    raise GuardTripped(f"more than {guard} paths")
            else:
                on_path.add(w)
                extend(w)
                on_path.discard(w)
            verts.pop()
            arcs.pop()

    extend(s)
    return found


def oracle_detour(
    g: PlaneGraph, s: int, t: int, k: int, guard: int = DEFAULT_GUARD
) -> GroundedPath | None:
    """A shortest simple s->t path of length at least dist(s, t) + k, by enumeration.

    The distance is taken as the shortest enumerated path, not from a BFS.
    """
    paths = enumerate_simple_paths(g, s, t, guard)
    if not paths:
        raise TUnreachable(f"t={t} is unreachable from s={s}")
    dist = min(p.length for p in paths)
    long_enough = [p for p in paths if p.length >= dist + k]
    return min(long_enough, key=lambda p: p.length, default=None)


def oracle_max_excess(g: PlaneGraph, s: int, t: int, guard: int = DEFAULT_GUARD) -> int:
    """Length of the longest simple s->t path minus dist(s, t)."""
    paths = enumerate_simple_paths(g, s, t, guard)
    if not paths:
        raise TUnreachable(f"t={t} is unreachable from s={s}")
    lengths = [p.length for p in paths]
    return max(lengths) - min(lengths)


def oracle_excesses(g: PlaneGraph, s: int, t: int, guard: int = DEFAULT_GUARD) -> set[int]:
    """Every value of length(P) - dist(s, t) over simple s->t paths P."""
    paths = enumerate_simple_paths(g, s, t, guard)
    if not paths:
        raise TUnreachable(f"t={t} is unreachable from s={s}")
    dist = min(p.length for p in paths)
    return {p.length - dist for p in paths}


def oracle_two_disjoint_paths(
    h: PlaneGraph, x: int, y: int, t: int, guard: int = DEFAULT_GUARD
) -> tuple[GroundedPath, GroundedPath] | None:
    """An x->y path and a y->t path sharing only y, by trying all pairs."""
    firsts = enumerate_simple_paths(h, x, y, guard)
    seconds = enumerate_simple_paths(h, y, t, guard)
    if len(firsts) * len(seconds) > 100 * guard:
        raise GuardTripped("too many path pairs")
    for p1 in firsts:
        used = set(p1.vertices)
        for p2 in seconds:
            if used.isdisjoint(p2.vertices[1:]) and (x not in p2.vertices):
                return p1, p2
    return None


def lex_compare(
    g: PlaneGraph, outer: int | None, p1: GroundedPath, p2: GroundedPath
) -> LexOrder:
    """Compare two paths with a common origin on the outer face, literally.

    Past the longest common prefix, with branch vertex ``q`` entered through
    arc ``pq``, the first path is less when ``pq``, its next arc and the other
    path's next arc appear clockwise in this order around ``q``.  At the
    origin ``pq`` is an imaginary arc arriving from outside the outer face.
    """
    if outer is None:
        outer = g.outer_face
    if outer is None:
        raise ValueError("no outer face elected")
    if p1.origin != p2.origin:
        raise DifferentOrigins(f"paths start at {p1.origin} and {p2.origin}")
    face = g.faces[outer]
    if p1.origin not in face.vertex_set:
        raise NotOnOuterFace(f"origin {p1.origin} is not on the outer face")
    if p1.arcs == p2.arcs:
        raise ValueError("paths are equal")
    i = 0
    while i < min(p1.length, p2.length) and p1.arcs[i] == p2.arcs[i]:
        i += 1
    if i == p1.length:
        return LexOrder.PREFIX
    if i == p2.length:
        return LexOrder.GREATER
    q = p1.vertices[i]
    rot = list(g.rotation_darts[q])
    deg = len(rot)
    if i == 0:
        # the imaginary arc sits just clockwise-after the outgoing face dart,
        # so the dart before that face dart is the first one met clockwise
        d_out = g.corner_dart(outer, q)
        first = (rot.index(d_out) - 1) % deg

        def cw(dart: int) -> int:
            return (first - rot.index(dart)) % deg

    else:
        ref = rot.index(g.dart_at(p1.arcs[i - 1], q))

        def cw(dart: int) -> int:
            return (ref - rot.index(dart)) % deg

    r1 = g.dart_at(p1.arcs[i], q)
    r2 = g.dart_at(p2.arcs[i], q)
    return LexOrder.LESS if cw(r1) < cw(r2) else LexOrder.GREATER


def lex_minimum(
    g: PlaneGraph, outer: int | None, paths: Iterable[GroundedPath]
) -> GroundedPath | None:
    best = None
    for p in paths:
        if best is None or lex_compare(g, outer, p, best).is_less:
            best = p
    return best


def lex_maximum(
    g: PlaneGraph, outer: int | None, paths: Iterable[GroundedPath]
) -> GroundedPath | None:
    best = None
    for p in paths:
        if best is None or not lex_compare(g, outer, p, best).is_less:
            best = p
    return best


def _masks(family: Iterable) -> list[int]:
    masks = []
    for member in family:
        mask = 0
        for v in member:
            mask |= 1 << v
        masks.append(mask)
    return masks


def verify_universal(family: Iterable, n: int, width: int, guard: int = 10**8) -> bool:
    """True iff every ``width``-subset of ``range(n)`` sees all 2**width traces.

    ``family`` is any iterable of vertex collections (a ColoringFamily works).
    """
    if width > n or width < 0:
        return False
    if comb(n, width) * (1 << width) > guard:
        raise GuardTripped(f"C({n},{width}) * 2^{width} exceeds the guard")
    masks = _masks(getattr(family, "colorings", family))
    full = 1 << width
    for subset in combinations(range(n), width):
        traces = set()
        for m in masks:
            code = 0
            for j, v in enumerate(subset):
                code |= ((m >> v) & 1) << j
            traces.add(code)
        if len(traces) != full:
            return False
    return True

"""Fixed-parameter search for an s->t path of length at least dist(s, t) + k.

Two stages:

1. ``exact_band_check`` looks for a path whose excess lies in ``[k, 3k - 1]``.
2. Otherwise every layer ``p`` and ordered pair ``x != y`` of that layer is
   tried.  A two-coloring guesses the first ``k`` vertices of the middle path
   (green) and its last ``k`` (blue); the leftmost green prefix is cut open and
   the middle path is completed by a leftmost path avoiding the cut, after
   which the tail to ``t`` is a reachability question.  Rightmost paths cover
   the mirror case.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Collection, Iterator

import numpy as np

from .detour import DetourWitness, TwoPaths, layer_face
from .errors import DidNotFinish, TUnreachable
from .grounded import (
    GroundedPath,
    Side,
    cut_along_path,
    extremal_path,
    extremal_tree,
    simplify_outer,
)
from .plane_graph import (
    BfsLayers,
    PlaneGraph,
    bfs_layers,
    directed_path,
    layered_subgraph,
)
from .universal import ColoringFamily, Mode, random_family, universal_family
from .verify import verify_witness

log = logging.getLogger(__name__)

DEFAULT_DELTA = 1e-3


class _Clock:
    def __init__(self, budget_ms: float | None):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000

    def check(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise DidNotFinish("time budget exhausted")


def _distances_to(g: PlaneGraph, t: int) -> list[float]:
    dist = [float("inf")] * g.vertex_count
    dist[t] = 0
    frontier = [t]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.predecessors[v]:
                if dist[u] == float("inf"):
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def exact_band_check(
    g: PlaneGraph, s: int, t: int, k: int, budget_ms: float | None = None
) -> DetourWitness | None:
    """A simple s->t path with excess in ``[k, 3k - 1]``, if one exists.

    Depth-first search that abandons a partial path once its length plus the
    remaining distance to ``t`` overshoots the band.  Exponential in the worst
    case.

    Raises:
        DidNotFinish: the budget ran out.
    """
    return _band_search(g, s, t, k, _Clock(budget_ms))


def _band_search(g: PlaneGraph, s: int, t: int, k: int, clock: _Clock) -> DetourWitness | None:
    if k < 1:
        raise ValueError("k must be at least 1")
    to_t = _distances_to(g, t)
    base = to_t[s]
    if base == float("inf"):
        raise TUnreachable(f"t={t} is unreachable from s={s}")
    lo, hi = base + k, base + 3 * k - 1
    if s == t or lo > g.vertex_count - 1:
        return None
    succ = [tuple(dict.fromkeys(x)) for x in g.successors]
    path = [s]
    on_path = {s}
    iters = [iter(succ[s])]
    steps = 0
    while iters:
        steps += 1
        if steps & 1023 == 0:
            clock.check()
        w = next(iters[-1], None)
        if w is None:
            iters.pop()
            on_path.discard(path.pop())
            continue
        if w in on_path:
            continue
        length = len(path)
        if length + to_t[w] > hi:
            continue
        if w == t:
            if length >= lo:
                found = path + [t]
                return DetourWitness(tuple(found), len(found) - 1, int(base), "band")
            continue
        path.append(w)
        on_path.add(w)
        iters.append(iter(succ[w]))
    return None


# -- special pairs -------------------------------------------------------


def _complete_prefix(
    h: PlaneGraph, x: int, y: int, t: int, k: int, prefix: GroundedPath, side: Side
) -> TwoPaths | None:
    """Extend an extremal green prefix to a middle path and look for the tail."""
    if prefix.length == 0:
        rest = extremal_path(h, h.outer_face, x, y, side)
        if rest is None:
            return None
        p1 = rest
    else:
        cut = cut_along_path(h, h.outer_face, prefix)
        xp = cut.to_new[prefix.destination]
        yc = cut.to_new[y]
        opened = simplify_outer(cut.graph, cut.outer_face, yc, xp).graph
        fresh = cut.new_boundary
        rest = extremal_path(
            opened, opened.outer_face, xp, yc, side, allowed=lambda v: v not in fresh
        )
        if rest is None:
            return None
        p1 = prefix + GroundedPath(
            tuple(cut.lineage[v] for v in rest.vertices),
            tuple(cut.arc_lineage[a] for a in rest.arcs),
        )
    if p1.length < 2 * k or not p1.is_simple():
        return None
    blocked = set(p1.vertices)
    blocked.discard(y)
    if t in blocked:
        return None
    tail = directed_path(h, y, t, blocked)
    if tail is None:
        return None
    return TwoPaths(p1, GroundedPath(tuple(tail[0]), tuple(tail[1])))


def special_pair_trial(
    h: PlaneGraph,
    x: int,
    y: int,
    t: int,
    k: int,
    coloring: Collection[int],
    side: Side,
    memo: dict | None = None,
) -> TwoPaths | None:
    """One color-coding trial for a special pair of paths in ``h``.

    ``h`` must be simplified so that its outer face is the digon on ``x`` and
    ``y``; ``coloring`` holds the green vertices of ``h``.  For each candidate
    ``x'`` (the k-th vertex of the middle path) the extremal green ``x -> x'``
    path is taken as the prefix; prefixes that are not exactly ``k`` vertices
    long are skipped.  ``memo`` caches completions by prefix, which do not
    depend on the coloring.
    """
    tree = extremal_tree(h, h.outer_face, x, side, allowed=coloring)
    if x not in tree.parent_arc:
        return None
    if k == 1:
        ends = [x]
    else:
        depth = {x: 0}
        for v in tree.order[1:]:
            depth[v] = depth[h.arcs[tree.parent_arc[v]][0]] + 1
        ends = sorted(v for v, d in depth.items() if d == k - 1 and v not in (y, t))
    for xp in ends:
        prefix = tree.path_to(h, xp)
        assert prefix is not None
        if y in prefix.vertices or t in prefix.vertices:
            continue
        key = (side, prefix.arcs)
        if memo is not None and key in memo:
            result = memo[key]
        else:
            result = _complete_prefix(h, x, y, t, k, prefix, side)
            if memo is not None:
                memo[key] = result
        if result is not None:
            return result
    return None


# -- driver --------------------------------------------------------------


def _triples(g: PlaneGraph, layers: BfsLayers, t: int, k: int) -> Iterator[tuple[int, int, int]]:
    for p in range(1, layers.layer_of[t] + 1):
        members = layers.layers[p]
        for x in members:
            for y in members:
                if x != y:
                    yield p, x, y


def _solve_triples(args) -> tuple[tuple[int, int, int], list[int]] | None:
    g, layers, t, k, mode, seed, delta, family, triples, deadline = args
    clock = _Clock(None)
    clock.deadline = deadline
    contexts: dict[int, tuple | None] = {}
    for p, x, y in triples:
        clock.check()
        if p not in contexts:
            sub = layered_subgraph(g, layers, p, t)
            local = [sub.to_new[u] for u in layers.layers[p] if u in sub.to_new]
            if len(local) < 2 or sub.graph.vertex_count < 2 * k + 1:
                contexts[p] = None
            else:
                contexts[p] = (sub, layer_face(sub.graph, local))
        ctx = contexts[p]
        if ctx is None:
            continue
        sub, face = ctx
        if x not in sub.to_new or y not in sub.to_new:
            continue
        xl, yl, tl = sub.to_new[x], sub.to_new[y], sub.to_new[t]
        h = simplify_outer(sub.graph.with_outer(face), face, yl, xl).graph
        if mode is Mode.MONTE_CARLO:
            rng = np.random.default_rng([seed, p, x, y])
            family = random_family(list(sub.to_old), k, delta, rng)
        memo: dict = {}
        to_old = sub.to_old
        for coloring in family:
            clock.check()
            green = {v for v in range(sub.graph.vertex_count) if to_old[v] in coloring}
            if xl not in green:
                continue
            for side in (Side.LEFT, Side.RIGHT):
                pair = special_pair_trial(h, xl, yl, tl, k, green, side, memo)
                if pair is not None:
                    mid = [to_old[v] for v in pair.p1.vertices]
                    end = [to_old[v] for v in pair.p2.vertices]
                    start = layers.shortest_path(g, x)
                    assert all(layers.layer_of[v] < p for v in start[:-1])
                    return (p, x, y), start + mid[1:] + end[1:]
    return None


def long_detour(
    g: PlaneGraph,
    s: int,
    t: int,
    k: int,
    mode: Mode | str = Mode.UNIVERSAL,
    seed: int = 0,
    delta: float = DEFAULT_DELTA,
    budget_ms: float | None = None,
    jobs: int = 1,
    skip_band: bool = False,
) -> DetourWitness | None:
    """Find a simple s->t path of length at least dist(s, t) + k.

    ``mode`` selects seeded random colorings (``"mc"``: one-sided error,
    at most ``delta`` per instance) or a universal family (``"det"``).
    Returned witnesses are always verified.  ``skip_band`` disables the first
    stage, which keeps answers sound but may lose completeness; it exists to
    exercise the second stage on its own.

    Raises:
        TUnreachable: t cannot be reached from s.
        DidNotFinish: the budget ran out.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    mode = Mode(mode) if not isinstance(mode, Mode) else mode
    for v in (s, t):
        if not 0 <= v < g.vertex_count:
            raise ValueError(f"{v} is not a vertex")
    clock = _Clock(budget_ms)
    if s == t:
        return None
    layers = bfs_layers(g, s)
    if not layers.reachable(t):
        raise TUnreachable(f"t={t} is unreachable from s={s}")
    base = layers.layer_of[t]
    if base + k > g.vertex_count - 1:
        return None
    if not skip_band:
        found = _band_search(g, s, t, k, clock)
        if found is not None:
            return found
    if 2 * k + 1 > g.vertex_count:
        return None

    family: ColoringFamily | None = None
    if mode is Mode.UNIVERSAL:
        family = universal_family(g.vertex_count, 2 * k, seed)
    triples = list(_triples(g, layers, t, k))
    common = (g, layers, t, k, mode, seed, delta, family)
    if jobs <= 1:
        hit = _solve_triples(common + (triples, clock.deadline))
    else:
        hit = None
        batch = max(1, len(triples) // (4 * jobs))
        chunks = [triples[i : i + batch] for i in range(0, len(triples), batch)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for lo in range(0, len(chunks), jobs):
                wave = [common + (c, clock.deadline) for c in chunks[lo : lo + jobs]]
                found_any = [r for r in pool.map(_solve_triples, wave) if r is not None]
                if found_any:
                    hit = min(found_any)
                    break
    if hit is None:
        return None
    (p, x, y), path = hit
    check = verify_witness(g, s, t, k, path)
    if not check:
        raise AssertionError(f"internal error at (p, x, y)=({p}, {x}, {y}): {check.report}")
    assert len(path) - 1 >= base + 2 * k
    log.debug("long detour via p=%d x=%d y=%d", p, x, y)
    return DetourWitness(tuple(path), len(path) - 1, base, "color-coding")

"""Static diagrams: SVG with a Tutte-style layout, or Graphviz DOT."""

from __future__ import annotations

import math
from typing import Mapping, Sequence
from xml.sax.saxutils import escape

import numpy as np

from .plane_graph import PlaneGraph


def tutte_layout(g: PlaneGraph) -> dict[int, tuple[float, float]]:
    """Pin the outer face on a circle and put every other vertex at the mean of its neighbours.

    Without an elected outer face the longest face is pinned.

    Vertices that cannot reach the pinned ones through the underlying
    undirected graph end up at the centre.
    """
    n = g.vertex_count
    if n == 0:
        return {}
    outer = g.faces[g.outer_face] if g.outer_face is not None else None
    if outer is None and g.faces:
        outer = max(g.faces, key=lambda f: len(f.darts))
    ring = list(dict.fromkeys(outer.vertices)) if outer is not None else []
    if len(ring) < 3:
        ring = list(dict.fromkeys(ring + list(range(n))))[: min(n, 3)]
    pos = np.zeros((n, 2))
    for i, v in enumerate(ring):
        ang = 2 * math.pi * i / len(ring)
        pos[v] = (math.cos(ang), math.sin(ang))
    free = [v for v in range(n) if v not in set(ring)]
    if free:
        index = {v: i for i, v in enumerate(free)}
        lap = np.zeros((len(free), len(free)))
        rhs = np.zeros((len(free), 2))
        for u, v in g.arcs:
            if u == v:
                continue
            for a, b in ((u, v), (v, u)):
                if a in index:
                    lap[index[a], index[a]] += 1
                    if b in index:
                        lap[index[a], index[b]] -= 1
                    else:
                        rhs[index[a]] += pos[b]
        lap += 1e-9 * np.eye(len(free))
        pos[free] = np.linalg.lstsq(lap, rhs, rcond=None)[0]
    return {v: (float(x), float(y)) for v, (x, y) in enumerate(pos)}


def render_svg(
    g: PlaneGraph,
    coords: Mapping[int, tuple[float, float]] | None = None,
    path: Sequence[int] = (),
    size: int = 480,
) -> str:
    """SVG picture of ``g``; arcs on ``path`` are highlighted."""
    if coords is None:
        coords = tutte_layout(g)
    pts = np.array([coords[v] for v in range(g.vertex_count)] or [(0.0, 0.0)])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = max(float((hi - lo).max()), 1e-9)
    margin = 24
    scale = (size - 2 * margin) / span

    def xy(v: int) -> tuple[float, float]:
        x, y = coords[v]
        # flip y so that larger coordinates are drawn higher up
        return margin + (x - lo[0]) * scale, size - margin - (y - lo[1]) * scale

    on_path = set(zip(path, path[1:]))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        "<defs><marker id='tip' viewBox='0 0 10 10' refX='10' refY='5' markerWidth='6' "
        "markerHeight='6' orient='auto-start-reverse'><path d='M0,0 L10,5 L0,10 z'/></marker></defs>",
    ]
    multiplicity: dict[tuple[int, int], int] = {}
    for u, v in g.arcs:
        key = (min(u, v), max(u, v))
        multiplicity[key] = multiplicity.get(key, 0) + 1
    drawn: dict[tuple[int, int], int] = {}
    for u, v in g.arcs:
        (x1, y1), (x2, y2) = xy(u), xy(v)
        dx, dy = x2 - x1, y2 - y1
        d = math.hypot(dx, dy) or 1.0
        # shorten to the vertex discs; arcs sharing endpoints bow to their left
        x1, y1 = x1 + 8 * dx / d, y1 + 8 * dy / d
        x2, y2 = x2 - 8 * dx / d, y2 - 8 * dy / d
        key = (min(u, v), max(u, v))
        bend = 0 if multiplicity[key] == 1 else 8 + 12 * drawn.get((u, v), 0)
        drawn[(u, v)] = drawn.get((u, v), 0) + 1
        mx, my = (x1 + x2) / 2 - bend * dy / d, (y1 + y2) / 2 + bend * dx / d
        hot = (u, v) in on_path
        colour, width = ("#d62728", 3) if hot else ("#555", 1.2)
        out.append(
            f'<path d="M{x1:.1f},{y1:.1f} Q{mx:.1f},{my:.1f} {x2:.1f},{y2:.1f}" fill="none" '
            f'stroke="{colour}" stroke-width="{width}" marker-end="url(#tip)"/>'
        )
    for v in range(g.vertex_count):
        x, y = xy(v)
        fill = "#fdd" if v in set(path) else "#fff"
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="8" fill="{fill}" stroke="#000"/>')
        out.append(
            f'<text x="{x:.1f}" y="{y + 3:.1f}" font-size="9" text-anchor="middle">'
            f"{escape(str(v))}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dot(g: PlaneGraph, path: Sequence[int] = ()) -> str:
    on_path = set(zip(path, path[1:]))
    lines = ["digraph G {"]
    lines += [f"  {v};" for v in range(g.vertex_count)]
    for i, (u, v) in enumerate(g.arcs):
        style = ' [color=red, penwidth=2, label="%d"]' % i if (u, v) in on_path else f' [label="{i}"]'
        lines.append(f"  {u} -> {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"

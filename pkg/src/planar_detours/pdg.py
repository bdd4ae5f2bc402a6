"""Plain-text serialization of plane digraphs.

::

    pdg 1
    n 3
    arcs 3
    a 0 0 1
    a 1 1 2
    a 2 2 0
    rot 0 0 2
    rot 1 1 0
    rot 2 2 1

Rotations list incident arcs anti-clockwise.  ``#`` starts a comment; the
generator stores lattice coordinates in comments of the form ``# at v x y``
so drawings can reuse them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .plane_graph import PlaneGraph, build_plane_graph

FORMAT_VERSION = 1


@dataclass(frozen=True)
class PdgDocument:
    graph: PlaneGraph
    version: int = FORMAT_VERSION
    comments: tuple[str, ...] = field(default=())

    def coordinates(self) -> dict[int, tuple[float, float]] | None:
        """Vertex positions recorded as ``at`` comments, if every vertex has one."""
        pos: dict[int, tuple[float, float]] = {}
        for c in self.comments:
            parts = c.split()
            if len(parts) == 4 and parts[0] == "at":
                try:
                    pos[int(parts[1])] = (float(parts[2]), float(parts[3]))
                except ValueError:
                    continue
        if len(pos) != self.graph.vertex_count:
            return None
        return pos


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def read_pdg_document(text: str) -> PdgDocument:
    """Parse a document, keeping its comments.

    Raises:
        ParseError: malformed directive, with the offending line number.
        InvalidEmbedding: the rotation system is not a valid embedding.
    """
    version = None
    n = m = None
    arcs: dict[int, tuple[int, int]] = {}
    rots: dict[int, tuple[int, ...]] = {}
    comments: list[str] = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        line, _, comment = raw.partition("#")
        if _:
            comments.append(comment.strip())
        tokens = line.split()
        if not tokens:
            continue
        head, rest = tokens[0], tokens[1:]
        if version is None:
            if head != "pdg" or len(rest) != 1:
                raise ParseError("document must start with 'pdg <version>'", lineno)
            (version,) = _ints(rest, lineno)
            if version != FORMAT_VERSION:
                raise ParseError(f"unsupported format version {version}", lineno)
            continue
        if head == "n":
            if n is not None or len(rest) != 1:
                raise ParseError("expected a single 'n <vertex_count>'", lineno)
            (n,) = _ints(rest, lineno)
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
        elif head == "arcs":
            if m is not None or len(rest) != 1:
                raise ParseError("expected a single 'arcs <arc_count>'", lineno)
            (m,) = _ints(rest, lineno)
            if m < 0:
                raise ParseError("arc count must be non-negative", lineno)
        elif head == "a":
            if n is None or m is None:
                raise ParseError("'a' before 'n' and 'arcs'", lineno)
            if len(rest) != 3:
                raise ParseError("expected 'a <arc_id> <tail> <head>'", lineno)
            a, u, v = _ints(rest, lineno)
            if a in arcs:
                raise ParseError(f"duplicate arc id {a}", lineno)
            if not 0 <= a < m:
                raise ParseError(f"arc id {a} outside 0..{m - 1}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"arc {a} has an endpoint outside 0..{n - 1}", lineno)
            arcs[a] = (u, v)
        elif head == "rot":
            if n is None:
                raise ParseError("'rot' before 'n'", lineno)
            if not rest:
                raise ParseError("expected 'rot <vertex> <arc_id>...'", lineno)
            v, *ids = _ints(rest, lineno)
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno)
            if v in rots:
                raise ParseError(f"duplicate rotation for vertex {v}", lineno)
            rots[v] = tuple(ids)
        elif head == "pdg":
            raise ParseError("repeated 'pdg' header", lineno)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if version is None:
        raise ParseError("empty document", max(last, 1))
    if n is None or m is None:
        raise ParseError("missing 'n' or 'arcs'", last)
    if len(arcs) != m:
        missing = min(set(range(m)) - arcs.keys())
        raise ParseError(f"arc {missing} is declared by 'arcs {m}' but never defined", last)
    rotations = [rots.get(v, ()) for v in range(n)]
    g = build_plane_graph(n, [arcs[a] for a in range(m)], rotations)
    return PdgDocument(g, version, tuple(comments))


def parse_pdg(text: str) -> PlaneGraph:
    return read_pdg_document(text).graph


def emit_pdg(g: PlaneGraph, comments: tuple[str, ...] | list[str] = ()) -> str:
    """Canonical text: header, counts, arcs by id, one rotation line per vertex."""
    lines = [f"# {c}" if c else "#" for c in comments]
    lines += [f"pdg {FORMAT_VERSION}", f"n {g.vertex_count}", f"arcs {g.arc_count}"]
    lines += [f"a {i} {u} {v}" for i, (u, v) in enumerate(g.arcs)]
    lines += [" ".join(["rot", str(v), *map(str, r)]) for v, r in enumerate(g.rotations)]
    return "\n".join(lines) + "\n"

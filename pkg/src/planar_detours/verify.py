"""Independent check of a claimed detour."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .plane_graph import PlaneGraph, bfs_layers


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    report: str

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(
    g: PlaneGraph, s: int, t: int, k: int, path: Sequence[int]
) -> WitnessReport:
    """Check that ``path`` is a simple s->t path of length at least dist(s, t) + k.

    The report names the first failed check.
    """
    path = list(path)
    if not path:
        return WitnessReport(False, "empty path")
    if any(not 0 <= v < g.vertex_count for v in path):
        return WitnessReport(False, "path names a vertex outside the graph")
    if path[0] != s:
        return WitnessReport(False, f"path starts at {path[0]}, not at s={s}")
    if path[-1] != t:
        return WitnessReport(False, f"path ends at {path[-1]}, not at t={t}")
    succ = g.successors
    for u, v in zip(path, path[1:]):
        if v not in succ[u]:
            return WitnessReport(False, f"missing arc {u}->{v}")
    if len(set(path)) != len(path):
        return WitnessReport(False, "path repeats a vertex")
    dist = bfs_layers(g, s).dist(t)
    length = len(path) - 1
    if length < dist + k:
        return WitnessReport(False, f"length {length} < dist {dist:g} + k {k}")
    return WitnessReport(True, f"ok: length {length} >= dist {dist:g} + k {k}")

"""Detours in plane directed graphs.

``directed_detour`` decides whether some simple s->t path is longer than the
shortest one; ``long_detour`` asks for a path at least ``k`` arcs longer.
Both return verified witnesses.
"""

from .detour import DetourWitness, directed_detour
from .errors import (
    DidNotFinish,
    EmptyAfterThinning,
    GuardTripped,
    InvalidEmbedding,
    NoCommonFace,
    NotGrounded,
    NotOnOuterFace,
    OuterFaceNotSimple,
    ParseError,
    PathTouchesBoundary,
    PlanarDetourError,
    TUnreachable,
    VertexRemoved,
    WidthTooLarge,
)
from .generate import GeneratorSpec, Instance, delaunay_instance, generate_instance
from .grounded import (
    GroundedPath,
    Side,
    cut_along_path,
    extremal_path,
    left_area_faces,
    left_area_vertices,
    simplify_outer,
)
from .long_detour import exact_band_check, long_detour, special_pair_trial
from .pdg import emit_pdg, parse_pdg, read_pdg_document
from .plane_graph import (
    Face,
    PlaneGraph,
    bfs_layers,
    build_plane_graph,
    layered_subgraph,
    trace_faces,
)
from .universal import ColoringFamily, Mode, universal_family
from .verify import verify_witness

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

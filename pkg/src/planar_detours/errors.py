"""Exception hierarchy shared by every module of the package."""


class PlanarDetourError(Exception):
    """Base class for all errors raised by planar_detours."""


class InvalidEmbedding(PlanarDetourError, ValueError):
    """The arcs and rotations do not describe a valid combinatorial embedding."""


class MalformedRotation(InvalidEmbedding):
    """An arc is missing from, or duplicated in, the rotation of an endpoint."""


class SelfLoop(InvalidEmbedding):
    pass


class VertexRemoved(PlanarDetourError, ValueError):
    """The vertex to keep lies in a deleted BFS layer."""


class NotOnOuterFace(PlanarDetourError, ValueError):
    pass


class OuterFaceNotSimple(PlanarDetourError, ValueError):
    pass


class PathTouchesBoundary(PlanarDetourError, ValueError):
    """An interior vertex of the path to cut along lies on the outer face."""


class NotGrounded(PlanarDetourError, ValueError):
    pass


class NoCommonFace(PlanarDetourError, RuntimeError):
    """No face carries the whole layer; this indicates an upstream bug."""


class TUnreachable(PlanarDetourError):
    """The target cannot be reached from the source, so the question is vacuous."""


class DidNotFinish(PlanarDetourError):
    """A wall-clock budget ran out before an answer was found."""


class GuardTripped(PlanarDetourError):
    """A brute-force routine exceeded its configured work guard."""


class WidthTooLarge(PlanarDetourError, ValueError):
    pass


class DifferentOrigins(PlanarDetourError, ValueError):
    pass


class ParseError(PlanarDetourError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class EmptyAfterThinning(PlanarDetourError, ValueError):
    pass

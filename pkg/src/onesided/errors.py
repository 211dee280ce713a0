"""Exception types raised across the package."""


class SlopeError(ValueError):
    """Base class for invalid slope or filling input."""


class ZeroCurve(SlopeError):
    pass


class NonPrimitive(SlopeError):
    pass


class NotOneSidedSlope(SlopeError):
    pass


class NotAVertex(SlopeError):
    pass


class RootHasNoParent(SlopeError):
    pass


class AmbiguousParent(RuntimeError):
    """Two admissible parents were found; the tree would not be a tree."""


class UnknownFormat(ValueError):
    pass


class InvalidSpec(SlopeError):
    pass


class InternalInconsistency(RuntimeError):
    """Tree genera disagree with the ratio verdict."""

"""Exception types raised by the geometry routines."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateTriangle(GeometryError):
    pass


class OffCircle(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class OddRank(GeometryError):
    """Drift is only defined for even iteration ranks."""


class TriangleInequalityViolation(GeometryError):
    pass


class MismatchedCircle(GeometryError):
    pass


class EmptyScene(GeometryError):
    pass

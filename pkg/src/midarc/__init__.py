"""Mid-arc iteration of a triangle on its circumcircle.

Repeatedly replacing each vertex by the midpoint of its opposite arc drives
any triangle to a pair of antipodal equilateral triangles. This package
computes the iteration exactly and in floating point, builds the classical
companion triangles (Morley, Napoleon, excentral, contact), checks the
orientation and size of the limits, and draws SVG figures.
"""

from midarc.arcs import (
    AngularTriangle,
    ArcTriple,
    DriftReport,
    RationalArcTriple,
    arcs_of,
    deviation,
    drift,
    iterate_arcs,
    limit_arcs,
    limit_triangles,
    rational_iterate,
    rational_step,
    step_angular,
    step_arcs,
    to_angular,
)
from midarc.euclid import (
    AngleTriple,
    Circle,
    LabeledTriangle,
    Point,
    angles_of,
    angular_position,
    circumcircle,
    line_intersection,
)

__version__ = "0.1.0"

__all__ = [
    "AngleTriple",
    "AngularTriangle",
    "ArcTriple",
    "Circle",
    "DriftReport",
    "LabeledTriangle",
    "Point",
    "RationalArcTriple",
    "angles_of",
    "angular_position",
    "arcs_of",
    "circumcircle",
    "deviation",
    "drift",
    "iterate_arcs",
    "limit_arcs",
    "limit_triangles",
    "line_intersection",
    "rational_iterate",
    "rational_step",
    "step_angular",
    "step_arcs",
    "to_angular",
]

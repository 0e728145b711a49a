"""Classical companion triangles: Morley, Napoleon, excentral, contact.

Output vertex X is always the one associated with reference side x (the
Morley vertex nearest BC, the Napoleon center erected on BC, the excenter
across BC, the incircle touch point on BC are all labelled A).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from midarc.errors import TriangleInequalityViolation
from midarc.euclid import (
    LabeledTriangle,
    Point,
    angles_of,
    line_intersection,
)

# inner Napoleon side below this fraction of the longest side counts as collapsed
NAPOLEON_COLLAPSE_RTOL = 1e-6


class NapoleonSide(str, Enum):
    OUTER = "outer"
    INNER = "inner"


@dataclass(frozen=True)
class DegenerateOutput:
    """Marker for a construction that collapsed to (nearly) a single point."""

    center: Point
    size: float


def morley(t: LabeledTriangle) -> LabeledTriangle:
    alpha, beta, gamma = angles_of(t)
    s = t.winding
    A, B, C = t.vertices

    def near(p: Point, q: Point, at_p: float, at_q: float) -> Point:
        # trisectors at p and q adjacent to side pq; interior lies to the left of p->q when s=+1
        return line_intersection(
            p, (q - p).direction() + s * at_p / 3, q, (p - q).direction() - s * at_q / 3
        )

    return LabeledTriangle(
        near(B, C, beta, gamma), near(C, A, gamma, alpha), near(A, B, alpha, beta)
    )


def _erected_center(p: Point, q: Point, outward: float) -> Point:
    # centroid of the equilateral triangle on p->q, on the side given by the sign
    m = (p + q).scale(0.5)
    d = q - p
    normal = Point(d.y, -d.x).scale(outward / (2 * math.sqrt(3)))
    return m + normal


def napoleon(t: LabeledTriangle, side: NapoleonSide | str = NapoleonSide.OUTER):
    """Outer or inner Napoleon triangle.

    Returns :class:`DegenerateOutput` when the inner triangle collapses,
    which happens for equilateral input.
    """
    side = NapoleonSide(side)
    # for a ccw triangle the right-hand normal of each directed side points out
    sign = t.winding if side is NapoleonSide.OUTER else -t.winding
    A, B, C = t.vertices
    na = _erected_center(B, C, sign)
    nb = _erected_center(C, A, sign)
    nc = _erected_center(A, B, sign)
    size = max(na.dist(nb), nb.dist(nc), nc.dist(na))
    if size < NAPOLEON_COLLAPSE_RTOL * max(t.sides):
        center = Point((na.x + nb.x + nc.x) / 3, (na.y + nb.y + nc.y) / 3)
        return DegenerateOutput(center, size)
    return LabeledTriangle(na, nb, nc)


def _weighted(points, weights) -> Point:
    total = sum(weights)
    return Point(
        sum(w * p.x for p, w in zip(points, weights)) / total,
        sum(w * p.y for p, w in zip(points, weights)) / total,
    )


def incenter(t: LabeledTriangle) -> Point:
    return _weighted(t.vertices, t.sides)


def inradius(t: LabeledTriangle) -> float:
    a, b, c = t.sides
    return 2 * abs(t.signed_area) / (a + b + c)


def excenters(t: LabeledTriangle) -> tuple[Point, Point, Point]:
    a, b, c = t.sides
    vs = t.vertices
    return (
        _weighted(vs, (-a, b, c)),
        _weighted(vs, (a, -b, c)),
        _weighted(vs, (a, b, -c)),
    )


def excentral(t: LabeledTriangle) -> LabeledTriangle:
    return LabeledTriangle(*excenters(t))


def contact(t: LabeledTriangle) -> LabeledTriangle:
    a, b, c = t.sides
    s = (a + b + c) / 2
    A, B, C = t.vertices
    return LabeledTriangle(
        B + (C - B).scale((s - b) / a),
        C + (A - C).scale((s - c) / b),
        A + (B - A).scale((s - a) / c),
    )


def internal_bisector_directions(t: LabeledTriangle) -> tuple[float, float, float]:
    """Direction of the internal angle bisector at A, B, C."""
    out = []
    for p, q, r in ((t.A, t.B, t.C), (t.B, t.C, t.A), (t.C, t.A, t.B)):
        u = q - p
        v = r - p
        s = u.scale(1 / u.norm()) + v.scale(1 / v.norm())
        out.append(s.direction())
    return tuple(out)


def external_bisector_directions(t: LabeledTriangle) -> tuple[float, float, float]:
    out = []
    for p, q, r in ((t.A, t.B, t.C), (t.B, t.C, t.A), (t.C, t.A, t.B)):
        u = q - p
        v = r - p
        d = u.scale(1 / u.norm()) - v.scale(1 / v.norm())
        out.append(d.direction())
    return tuple(out)


def heron_area(a: float, b: float, c: float) -> float:
    """Triangle area from its sides (Kahan's cancellation-safe ordering)."""
    a, b, c = sorted((a, b, c), reverse=True)
    if not (c > 0 and a < b + c):
        raise TriangleInequalityViolation(f"sides {a}, {b}, {c} do not form a triangle")
    prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    if prod <= 0:
        raise TriangleInequalityViolation(f"sides {a}, {b}, {c} do not form a triangle")
    return 0.25 * math.sqrt(prod)


def circumradius_from_sides(a: float, b: float, c: float) -> float:
    return a * b * c / (4 * heron_area(a, b, c))

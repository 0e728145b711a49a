"""Planar primitives: points, circles, labelled triangles and angle helpers.

Angles are radians throughout. Angular positions on a circle are kept in
``[0, 2*pi)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from midarc.errors import DegenerateTriangle, OffCircle, ParallelLines

TAU = 2.0 * math.pi

# |signed area| <= DEGENERACY_EPS * longest_side**2 counts as collinear
DEGENERACY_EPS = 1e-12
ANGLE_TOL = 1e-9
LENGTH_RTOL = 1e-9
PARALLEL_EPS = 1e-12


def normalize_angle(theta: float) -> float:
    """Reduce ``theta`` to ``[0, 2*pi)``."""
    r = theta - TAU * math.floor(theta / TAU)
    # floor can leave r == TAU for tiny negative inputs
    if r >= TAU or r < 0.0:
        r = 0.0
    return r


def wrap_pi(theta: float) -> float:
    """Reduce ``theta`` to ``(-pi, pi]``."""
    r = math.remainder(theta, TAU)
    return math.pi if r == -math.pi else r


def wrap_half_pi(theta: float) -> float:
    """Reduce an undirected line angle to ``(-pi/2, pi/2]``."""
    r = math.remainder(theta, math.pi)
    return math.pi / 2 if r == -math.pi / 2 else r


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def direction(self) -> float:
        return math.atan2(self.y, self.x)


def cross(u: Point, v: Point) -> float:
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> float:
    return u.x * v.x + u.y * v.y


def polar(center: Point, radius: float, theta: float) -> Point:
    return Point(center.x + radius * math.cos(theta), center.y + radius * math.sin(theta))


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    def point_at(self, theta: float) -> Point:
        return polar(self.center, self.radius, theta)

    @property
    def circumference(self) -> float:
        return TAU * self.radius


@dataclass(frozen=True)
class AngleTriple:
    alpha: float
    beta: float
    gamma: float

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))


@dataclass(frozen=True)
class LabeledTriangle:
    """Triangle ABC; side ``a`` is opposite vertex ``A`` and so on.

    Construction rejects (near-)collinear vertices. The winding of the
    input is kept as given and exposed through :attr:`winding`.
    """

    A: Point
    B: Point
    C: Point

    def __post_init__(self):
        longest = max(self.a, self.b, self.c)
        if longest == 0.0 or abs(self.signed_area) <= DEGENERACY_EPS * longest * longest:
            raise DegenerateTriangle(
                f"collinear or coincident vertices: {self.A}, {self.B}, {self.C}"
            )

    @classmethod
    def from_coords(cls, coords) -> LabeledTriangle:
        (ax, ay), (bx, by), (cx, cy) = coords
        return cls(Point(ax, ay), Point(bx, by), Point(cx, cy))

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.A, self.B, self.C)

    @property
    def a(self) -> float:
        return self.B.dist(self.C)

    @property
    def b(self) -> float:
        return self.C.dist(self.A)

    @property
    def c(self) -> float:
        return self.A.dist(self.B)

    @property
    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    @property
    def signed_area(self) -> float:
        return 0.5 * cross(self.B - self.A, self.C - self.A)

    @property
    def winding(self) -> int:
        """+1 for counterclockwise A->B->C, -1 for clockwise."""
        return 1 if self.signed_area > 0 else -1

    def side_directions(self) -> tuple[float, float, float]:
        """Directions of the directed sides B->C, C->A, A->B (sides a, b, c)."""
        return (
            (self.C - self.B).direction(),
            (self.A - self.C).direction(),
            (self.B - self.A).direction(),
        )

    def map(self, f) -> LabeledTriangle:
        return LabeledTriangle(f(self.A), f(self.B), f(self.C))


def circumcircle(t: LabeledTriangle) -> Circle:
    # solved relative to A to limit cancellation for far-from-origin input
    b = t.B - t.A
    c = t.C - t.A
    d = 2.0 * cross(b, c)
    if d == 0.0:
        raise DegenerateTriangle("collinear vertices have no circumcircle")
    bb = dot(b, b)
    cc = dot(c, c)
    ux = (c.y * bb - b.y * cc) / d
    uy = (b.x * cc - c.x * bb) / d
    return Circle(Point(t.A.x + ux, t.A.y + uy), math.hypot(ux, uy))


def angular_position(circle: Circle, p: Point, rtol: float = 1e-9) -> float:
    """Angle of ``p`` seen from the circle center, in ``[0, 2*pi)``."""
    v = p - circle.center
    r = v.norm()
    if abs(r - circle.radius) > rtol * circle.radius:
        raise OffCircle(f"{p} is {r} from center, radius is {circle.radius}")
    return normalize_angle(math.atan2(v.y, v.x))


def line_intersection(p1: Point, d1: float, p2: Point, d2: float) -> Point:
    """Intersect the line through ``p1`` at angle ``d1`` with the one through ``p2`` at ``d2``."""
    u = Point(math.cos(d1), math.sin(d1))
    v = Point(math.cos(d2), math.sin(d2))
    den = cross(u, v)
    if abs(den) <= PARALLEL_EPS:
        raise ParallelLines(f"lines at {d1} and {d2} rad are parallel")
    t = cross(p2 - p1, v) / den
    return p1 + u.scale(t)


def angles_of(t: LabeledTriangle) -> AngleTriple:
    def at(p: Point, q: Point, r: Point) -> float:
        u = q - p
        v = r - p
        return math.atan2(abs(cross(u, v)), dot(u, v))

    return AngleTriple(at(t.A, t.B, t.C), at(t.B, t.C, t.A), at(t.C, t.A, t.B))

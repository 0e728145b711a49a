"""Mid-arc iteration on the circumcircle.

Each step replaces vertex X by the midpoint of the circumcircle arc
opposite X (the arc between the other two vertices that does not contain
X). That point is where the perpendicular bisector of the opposite side and
the internal bisector at X meet the circle. The new vertex keeps the label
X, so the opposite-arc triple evolves by

    (l_a, l_b, l_c) -> ((l_b + l_c)/2, (l_a + l_c)/2, (l_a + l_b)/2)

and every component's distance from circumference/3 halves and flips sign.
Even ranks tend to one equilateral triangle and odd ranks to its antipode.

Floating-point work uses :class:`ArcTriple` (lengths); exact work uses
:class:`RationalArcTriple` (fractions of the circumference).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from midarc.errors import OddRank
from midarc.euclid import (
    TAU,
    Circle,
    LabeledTriangle,
    angular_position,
    circumcircle,
    normalize_angle,
    wrap_pi,
)

ANGLE_SEPARATION_EPS = 1e-12
ARC_SUM_RTOL = 1e-12
# 2**-60 of the initial deviation is far below double resolution
LIMIT_STEPS = 60


@dataclass(frozen=True)
class ArcTriple:
    """Opposite-arc lengths ``(l_a, l_b, l_c)`` on a circle of given circumference."""

    l_a: float
    l_b: float
    l_c: float
    circumference: float

    def __post_init__(self):
        if not (self.l_a > 0 and self.l_b > 0 and self.l_c > 0):
            raise ValueError(f"arc lengths must be positive: {self.as_tuple()}")
        total = self.l_a + self.l_b + self.l_c
        if abs(total - self.circumference) > ARC_SUM_RTOL * self.circumference:
            raise ValueError(
                f"arcs sum to {total}, circumference is {self.circumference}"
            )

    @classmethod
    def from_lengths(cls, l_a: float, l_b: float, l_c: float) -> ArcTriple:
        return cls(l_a, l_b, l_c, l_a + l_b + l_c)

    @classmethod
    def from_angles(cls, alpha: float, beta: float, gamma: float, radius: float = 1.0) -> ArcTriple:
        """Arcs of a triangle with the given angles, using l = 2*R*angle."""
        return cls(2 * radius * alpha, 2 * radius * beta, 2 * radius * gamma, TAU * radius)

    @property
    def radius(self) -> float:
        return self.circumference / TAU

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l_a, self.l_b, self.l_c)

    def __iter__(self):
        return iter(self.as_tuple())


@dataclass(frozen=True)
class RationalArcTriple:
    """Arcs as exact fractions of the circumference; they sum to exactly 1."""

    f_a: Fraction
    f_b: Fraction
    f_c: Fraction

    def __post_init__(self):
        for name in ("f_a", "f_b", "f_c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not (self.f_a > 0 and self.f_b > 0 and self.f_c > 0):
            raise ValueError(f"arc fractions must be positive: {self.as_tuple()}")
        if self.f_a + self.f_b + self.f_c != 1:
            raise ValueError(f"arc fractions must sum to 1: {self.as_tuple()}")

    @classmethod
    def parse(cls, text: str) -> RationalArcTriple:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three fractions, got {text!r}")
        return cls(*(Fraction(p) for p in parts))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.f_a, self.f_b, self.f_c)

    def __iter__(self):
        return iter(self.as_tuple())

    def to_arcs(self, radius: float = 1.0) -> ArcTriple:
        s = TAU * radius
        return ArcTriple(float(self.f_a) * s, float(self.f_b) * s, float(self.f_c) * s, s)


@dataclass(frozen=True)
class AngularTriangle:
    """Triangle given by three angular positions on a circle.

    Labels stay attached to the input vertices. ``winding`` is +1 when
    A -> B -> C runs counterclockwise.
    """

    circle: Circle
    theta_a: float
    theta_b: float
    theta_c: float

    def __post_init__(self):
        for name in ("theta_a", "theta_b", "theta_c"):
            object.__setattr__(self, name, normalize_angle(getattr(self, name)))
        ta, tb, tc = self.thetas
        for p, q in ((ta, tb), (tb, tc), (tc, ta)):
            if abs(wrap_pi(p - q)) <= ANGLE_SEPARATION_EPS:
                raise ValueError(f"coincident vertex positions: {self.thetas}")

    @property
    def thetas(self) -> tuple[float, float, float]:
        return (self.theta_a, self.theta_b, self.theta_c)

    @property
    def winding(self) -> int:
        ta, tb, tc = self.thetas
        return 1 if (tb - ta) % TAU < (tc - ta) % TAU else -1

    def to_labeled(self) -> LabeledTriangle:
        return LabeledTriangle(*(self.circle.point_at(t) for t in self.thetas))

    def antipodal(self) -> AngularTriangle:
        return AngularTriangle(self.circle, *(t + math.pi for t in self.thetas))


def opposite_arc(t_p: float, t_q: float, t_x: float) -> tuple[float, float]:
    """Arc between positions ``t_p`` and ``t_q`` that avoids ``t_x``.

    Returns ``(start, sweep)``: the arc runs counterclockwise from ``start``
    through ``sweep`` radians.
    """
    d = (t_q - t_p) % TAU
    if (t_x - t_p) % TAU < d:
        return t_q, TAU - d
    return t_p, d


def to_angular(t: LabeledTriangle) -> AngularTriangle:
    circle = circumcircle(t)
    return AngularTriangle(circle, *(angular_position(circle, p) for p in t.vertices))


def arcs_of(t: AngularTriangle) -> ArcTriple:
    ta, tb, tc = t.thetas
    r = t.circle.radius
    return ArcTriple(
        r * opposite_arc(tb, tc, ta)[1],
        r * opposite_arc(tc, ta, tb)[1],
        r * opposite_arc(ta, tb, tc)[1],
        t.circle.circumference,
    )


def step_arcs(l: ArcTriple) -> ArcTriple:
    return ArcTriple(
        (l.l_b + l.l_c) / 2, (l.l_a + l.l_c) / 2, (l.l_a + l.l_b) / 2, l.circumference
    )


def _midpoint(t_p: float, t_q: float, t_x: float) -> float:
    start, sweep = opposite_arc(t_p, t_q, t_x)
    return start + sweep / 2


def step_angular(t: AngularTriangle) -> AngularTriangle:
    ta, tb, tc = t.thetas
    return AngularTriangle(
        t.circle, _midpoint(tb, tc, ta), _midpoint(tc, ta, tb), _midpoint(ta, tb, tc)
    )


def iterate_angular(t: AngularTriangle, n: int) -> AngularTriangle:
    for _ in range(n):
        t = step_angular(t)
    return t


def parity_coefficients(n: int) -> tuple[int, int]:
    """Integer numerators ``(own, other)`` of the rank-``n`` closed form.

    The rank-``n`` arc is ``(own*l_x + other*(l_y + l_z)) / 2**n``. Even
    ranks give ``((2**n+2)/3, (2**n-1)/3)`` and odd ranks give
    ``((2**n-2)/3, (2**n+1)/3)``.
    """
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    p = 1 << n
    if n % 2 == 0:
        own, other = divmod(p + 2, 3), divmod(p - 1, 3)
    else:
        own, other = divmod(p - 2, 3), divmod(p + 1, 3)
    assert own[1] == 0 and other[1] == 0
    return own[0], other[0]


def iterate_arcs(l: ArcTriple, n: int) -> ArcTriple:
    """Rank-``n`` arc triple from the parity closed form."""
    if n == 0:
        return l
    own, other = parity_coefficients(n)
    k_own = float(Fraction(own, 1 << n))
    k_other = float(Fraction(other, 1 << n))
    a, b, c = l.as_tuple()
    return ArcTriple(
        k_own * a + k_other * (b + c),
        k_own * b + k_other * (a + c),
        k_own * c + k_other * (a + b),
        l.circumference,
    )


def limit_arcs(l: ArcTriple) -> ArcTriple:
    third = l.circumference / 3
    return ArcTriple(third, third, third, l.circumference)


def deviation(l: ArcTriple | RationalArcTriple):
    """Largest distance of an arc from the equilateral value.

    Rational triples give an exact :class:`~fractions.Fraction` of the
    circumference.
    """
    if isinstance(l, RationalArcTriple):
        third = Fraction(1, 3)
        return max(abs(f - third) for f in l)
    third = l.circumference / 3
    return max(abs(x - third) for x in l)


def limit_triangles(t: AngularTriangle) -> tuple[AngularTriangle, AngularTriangle]:
    """Equilateral limits of the even-rank and odd-rank iterates.

    Each even-limit vertex sits at its original position shifted by the
    limiting drift. The odd limit is the antipodal triangle.
    """
    l = arcs_of(t)
    r = t.circle.radius
    w = t.winding
    ta, tb, tc = t.thetas
    even = AngularTriangle(
        t.circle,
        ta - w * (l.l_b - l.l_c) / (3 * r),
        tb - w * (l.l_c - l.l_a) / (3 * r),
        tc - w * (l.l_a - l.l_b) / (3 * r),
    )
    return even, even.antipodal()


Scalar = Union[float, Fraction]


@dataclass(frozen=True)
class DriftReport:
    """Displacement of vertex C after ``rank`` steps, measured toward B.

    Rational input gives ``drift_ab`` and ``drift_limit`` as exact
    fractions of the circumference.
    """

    rank: int
    drift_ab: Scalar
    drift_limit: Scalar
    orientation_angle: float


def drift(l: ArcTriple | RationalArcTriple, n: int) -> DriftReport:
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    if n % 2:
        raise OddRank(f"drift is defined for even ranks only, got {n}")
    if isinstance(l, RationalArcTriple):
        diff = l.f_a - l.f_b
        total = sum((Fraction(1, 4) ** k for k in range(n // 2)), Fraction(0))
        lim = diff / 3
        # fraction f of the circumference subtends an inscribed angle f*pi
        return DriftReport(n, diff / 4 * total, lim, float(lim) * math.pi)
    diff = l.l_a - l.l_b
    total = math.fsum(0.25**k for k in range(n // 2))
    lim = diff / 3
    return DriftReport(n, diff / 4 * total, lim, lim / (2 * l.radius))


def measured_drift(ref: AngularTriangle, t: AngularTriangle) -> float:
    """Arc length from ref's vertex C to t's vertex C, positive toward B."""
    # + 0.0 folds -0.0 into 0.0
    return -ref.winding * wrap_pi(t.theta_c - ref.theta_c) * ref.circle.radius + 0.0


def rational_step(f: RationalArcTriple) -> RationalArcTriple:
    return RationalArcTriple((f.f_b + f.f_c) / 2, (f.f_a + f.f_c) / 2, (f.f_a + f.f_b) / 2)


def rational_iterate(f: RationalArcTriple, n: int) -> RationalArcTriple:
    if n == 0:
        return f
    own, other = parity_coefficients(n)
    den = 1 << n
    a, b, c = f.as_tuple()
    return RationalArcTriple(
        (own * a + other * (b + c)) / den,
        (own * b + other * (a + c)) / den,
        (own * c + other * (a + b)) / den,
    )


def midarc_triangle(t: LabeledTriangle, n: int) -> LabeledTriangle:
    """Rank-``n`` mid-arc iterate of ``t`` in Cartesian form."""
    return iterate_angular(to_angular(t), n).to_labeled()


def _rational_midpoint(p: Fraction, q: Fraction, x: Fraction) -> Fraction:
    d = (q - p) % 1
    if (x - p) % 1 < d:
        return (q + (1 - d) / 2) % 1
    return (p + d / 2) % 1


def rational_positions(f: RationalArcTriple) -> tuple[Fraction, Fraction, Fraction]:
    """Exact vertex positions, in turns, of a ccw triangle with A at 0."""
    return (Fraction(0), f.f_c, f.f_c + f.f_a)


def rational_step_positions(pos: tuple[Fraction, Fraction, Fraction]):
    """One mid-arc step on positions measured in turns (fractions of 2*pi)."""
    a, b, c = pos
    return (
        _rational_midpoint(b, c, a),
        _rational_midpoint(c, a, b),
        _rational_midpoint(a, b, c),
    )

"""Similarity, orientation and convergence measurements, plus the batch
verification suite behind ``midarc verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from midarc import kernels
from midarc.arcs import (
    LIMIT_STEPS,
    AngularTriangle,
    ArcTriple,
    RationalArcTriple,
    arcs_of,
    deviation,
    drift,
    iterate_arcs,
    limit_triangles,
    measured_drift,
    midarc_triangle,
    rational_iterate,
    rational_step,
    step_angular,
    step_arcs,
    to_angular,
)
from midarc.classic import (
    DegenerateOutput,
    circumradius_from_sides,
    contact,
    excentral,
    external_bisector_directions,
    internal_bisector_directions,
    morley,
    napoleon,
)
from midarc.errors import DegenerateTriangle, MismatchedCircle
from midarc.euclid import (
    TAU,
    Circle,
    LabeledTriangle,
    Point,
    angles_of,
    circumcircle,
    wrap_half_pi,
    wrap_pi,
)

DEFAULT_MIN_ANGLE = 0.1
# deviations below this fraction of the circumference are treated as converged
FIXED_POINT_RTOL = 1e-12
# ratio fitting stops once deviation is small enough for fp noise to matter
RATIO_FLOOR_RTOL = 1e-4

TOLERANCES = {
    "contraction": 1e-12,
    "closed_form": 1e-12,
    "limit_arcs": 1e-9,
    "limit_side": 1e-12,
    "antipodality": 1e-9,
    "limit_vs_iteration": 1e-9,
    "orientation": 1e-9,
    "drift": 1e-9,
    "equilateral": 1e-9,
    "parallel": 1e-9,
    "similarity": 1e-9,
    "bisector_perpendicular": 1e-12,
    "consistency": 1e-12,
    "circumradius": 1e-12,
    "ratio": 1e-9,
}


def equilateral_defect(t) -> float:
    """Relative side spread ``(max - min) / max``.

    Accepts a :class:`LabeledTriangle`, an :class:`AngularTriangle` or a
    triple of side lengths.
    """
    if isinstance(t, AngularTriangle):
        t = t.to_labeled()
    sides = t.sides if isinstance(t, LabeledTriangle) else tuple(t)
    hi, lo = max(sides), min(sides)
    if lo <= 0:
        raise DegenerateTriangle(f"degenerate side lengths {sides}")
    return (hi - lo) / hi


@dataclass(frozen=True)
class SimilarityReport:
    is_similar: bool
    ratio: float
    rotation: float
    sides_parallel: bool
    max_angle_mismatch: float
    max_parallel_residual: float


def similarity(t1: LabeledTriangle, t2: LabeledTriangle, tol: float = 1e-9) -> SimilarityReport:
    """Compare ``t2`` against ``t1`` under the A<->A, B<->B, C<->C correspondence.

    ``rotation`` is the counterclockwise turn from side c of ``t1`` to side
    c of ``t2``. Parallelism ignores direction (mod pi).
    """
    mismatch = max(
        abs(x - y) for x, y in zip(sorted(angles_of(t1)), sorted(angles_of(t2)))
    )
    ratio = sum(t2.sides) / sum(t1.sides)
    d1 = t1.side_directions()
    d2 = t2.side_directions()
    residual = max(abs(wrap_half_pi(y - x)) for x, y in zip(d1, d2))
    return SimilarityReport(
        is_similar=mismatch <= tol,
        ratio=ratio,
        rotation=wrap_pi(d2[2] - d1[2]),
        sides_parallel=residual <= tol,
        max_angle_mismatch=mismatch,
        max_parallel_residual=residual,
    )


def side_rotation(ref: LabeledTriangle, target: LabeledTriangle, side: str = "c") -> float:
    """Turn from ``ref``'s side to ``target``'s, in ``ref``'s winding sense, mod pi."""
    k = "abc".index(side)
    diff = target.side_directions()[k] - ref.side_directions()[k]
    return wrap_half_pi(ref.winding * diff)


def orientation_vs_reference(
    ref: AngularTriangle, target: AngularTriangle, tol: float = 1e-9
) -> float:
    c1, c2 = ref.circle, target.circle
    if (
        abs(c1.radius - c2.radius) > tol * c1.radius
        or c1.center.dist(c2.center) > tol * c1.radius
    ):
        raise MismatchedCircle(f"{c1} vs {c2}")
    return side_rotation(ref.to_labeled(), target.to_labeled())


def equilateral_offset(t1: LabeledTriangle, t2: LabeledTriangle) -> float:
    """Misalignment of two equilateral triangles, independent of labelling.

    All sides of an equilateral triangle agree mod pi/3, so this is zero
    exactly when the triangles are parallel under some vertex matching.
    """
    diff = t2.side_directions()[2] - t1.side_directions()[2]
    return abs(math.remainder(diff, math.pi / 3))


@dataclass(frozen=True)
class StepRecord:
    rank: int
    arcs: ArcTriple
    deviation: float
    drift_ab: Optional[float]
    thetas: tuple[float, float, float]


@dataclass(frozen=True)
class ConvergenceReport:
    steps: list[StepRecord]
    measured_ratio: Optional[float]
    even_limit: AngularTriangle
    odd_limit: AngularTriangle
    orientation_angle: float
    limit_side: float
    drift_limit: float
    fixed_point: bool = False

    def to_dict(self) -> dict:
        return {
            "steps": [
                {
                    "rank": s.rank,
                    "arcs": list(s.arcs.as_tuple()),
                    "circumference": s.arcs.circumference,
                    "deviation": s.deviation,
                    "drift_ab": s.drift_ab,
                    "thetas": list(s.thetas),
                }
                for s in self.steps
            ],
            "measured_ratio": self.measured_ratio,
            "even_limit": _angular_to_dict(self.even_limit),
            "odd_limit": _angular_to_dict(self.odd_limit),
            "orientation_angle": self.orientation_angle,
            "limit_side": self.limit_side,
            "drift_limit": self.drift_limit,
            "fixed_point": self.fixed_point,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ConvergenceReport:
        steps = [
            StepRecord(
                s["rank"],
                ArcTriple(*s["arcs"], s["circumference"]),
                s["deviation"],
                s["drift_ab"],
                tuple(s["thetas"]),
            )
            for s in d["steps"]
        ]
        return cls(
            steps=steps,
            measured_ratio=d["measured_ratio"],
            even_limit=_angular_from_dict(d["even_limit"]),
            odd_limit=_angular_from_dict(d["odd_limit"]),
            orientation_angle=d["orientation_angle"],
            limit_side=d["limit_side"],
            drift_limit=d["drift_limit"],
            fixed_point=d["fixed_point"],
        )


def _angular_to_dict(t: AngularTriangle) -> dict:
    c = t.circle
    return {"center": [c.center.x, c.center.y], "radius": c.radius, "thetas": list(t.thetas)}


def _angular_from_dict(d: dict) -> AngularTriangle:
    return AngularTriangle(Circle(Point(*d["center"]), d["radius"]), *d["thetas"])


def convergence_report(t: LabeledTriangle, n_max: int) -> ConvergenceReport:
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    ref = to_angular(t)
    s = ref.circle.circumference
    cur = ref
    steps = []
    for n in range(n_max + 1):
        l = arcs_of(cur)
        steps.append(
            StepRecord(
                n,
                l,
                deviation(l),
                measured_drift(ref, cur) if n % 2 == 0 else None,
                cur.thetas,
            )
        )
        if n < n_max:
            cur = step_angular(cur)

    fixed = steps[0].deviation < FIXED_POINT_RTOL * s
    ratio = None
    if not fixed:
        ratios = [
            nxt.deviation / prev.deviation
            for prev, nxt in zip(steps, steps[1:])
            if prev.deviation > RATIO_FLOOR_RTOL * s
        ]
        ratio = math.fsum(ratios) / len(ratios) if ratios else None

    even, odd = limit_triangles(ref)
    lt = even.to_labeled()
    return ConvergenceReport(
        steps=steps,
        measured_ratio=ratio,
        even_limit=even,
        odd_limit=odd,
        orientation_angle=orientation_vs_reference(ref, even),
        limit_side=math.fsum(lt.sides) / 3,
        drift_limit=drift(steps[0].arcs, 0).drift_limit,
        fixed_point=fixed,
    )


def random_triangle(
    seed: int, min_angle: float = DEFAULT_MIN_ANGLE, index: Optional[int] = None
) -> LabeledTriangle:
    """Seeded random triangle with every angle at least ``min_angle``.

    Vertices are uniform on a circle of radius in ``[0.5, 2]`` centred in
    ``[-1, 1]^2``; their order on the circle (hence the winding) is random.
    ``index`` selects an independent stream for batch sampling.
    """
    if not 0 < min_angle < math.pi / 3:
        raise ValueError(f"min_angle must lie in (0, pi/3), got {min_angle}")
    rng = np.random.default_rng(seed if index is None else [seed, index])
    while True:
        thetas = rng.uniform(0.0, TAU, 3)
        radius = rng.uniform(0.5, 2.0)
        cx, cy = rng.uniform(-1.0, 1.0, 2)
        pts = [Point(cx + radius * math.cos(t), cy + radius * math.sin(t)) for t in thetas]
        try:
            t = LabeledTriangle(*pts)
        except DegenerateTriangle:
            continue
        if min(angles_of(t)) >= min_angle:
            return t


def random_triangles(seed: int, count: int, min_angle: float = DEFAULT_MIN_ANGLE):
    return [random_triangle(seed, min_angle, index=i) for i in range(count)]


@dataclass
class Check:
    """Pass count and worst residual for one property over a sample set."""

    name: str
    tolerance: float
    passed: int = 0
    failed: int = 0
    worst: float = 0.0
    skipped: int = 0
    notes: list = field(default_factory=list)

    def record(self, residual: float) -> None:
        residual = float(residual)
        if residual <= self.tolerance:
            self.passed += 1
        else:
            self.failed += 1
        if residual > self.worst or math.isnan(residual):
            self.worst = residual

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "worst_residual": self.worst,
            "ok": self.ok,
        }


def _rel(x: float, y: float) -> float:
    return abs(x - y) / max(abs(y), 1e-300)


def _rational_probe(l: ArcTriple) -> RationalArcTriple:
    fa = Fraction(l.l_a / l.circumference).limit_denominator(10**6)
    fb = Fraction(l.l_b / l.circumference).limit_denominator(10**6)
    return RationalArcTriple(fa, fb, 1 - fa - fb)


def verify_suite(samples: int, seed: int, min_angle: float = DEFAULT_MIN_ANGLE) -> dict:
    """Run every invariant check over ``samples`` seeded random triangles.

    Returns a JSON-ready dict; ``result["ok"]`` is true only if every check
    passed on every sample.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    tol = TOLERANCES
    names = [
        ("contraction", "contraction"),
        ("contraction_exact", "contraction"),
        ("closed_form", "closed_form"),
        ("closed_form_exact", "closed_form"),
        ("limit_arcs", "limit_arcs"),
        ("limit_side_sqrt3R", "limit_side"),
        ("limit_side_heron", "limit_side"),
        ("antipodality", "antipodality"),
        ("even_limit_vs_iteration", "limit_vs_iteration"),
        ("measured_ratio", "ratio"),
        ("drift_limit_vs_iteration", "drift"),
        ("orientation_alpha_minus_beta_over_3", "orientation"),
        ("morley_equilateral", "equilateral"),
        ("morley_parallel_even_limit", "parallel"),
        ("morley_orientation", "orientation"),
        ("napoleon_outer_equilateral", "equilateral"),
        ("napoleon_inner_equilateral", "equilateral"),
        ("napoleon_outer_parallel_morley", "parallel"),
        ("excentral_similar_parallel_rank1", "parallel"),
        ("contact_similar_parallel_rank1", "parallel"),
        ("excentral_similar_parallel_rank2", "parallel"),
        ("contact_similar_parallel_rank2", "parallel"),
        ("excentral_similar_parallel_rank3", "parallel"),
        ("contact_similar_parallel_rank3", "parallel"),
        ("bisectors_perpendicular", "bisector_perpendicular"),
        ("step_consistency", "consistency"),
        ("circumradius_heron", "circumradius"),
    ]
    checks = {name: Check(name, tol[key]) for name, key in names}

    tris = random_triangles(seed, samples, min_angle)
    refs = [to_angular(t) for t in tris]
    radius = np.array([r.circle.radius for r in refs])
    circ = np.array([r.circle.circumference for r in refs])
    thetas = np.array([r.thetas for r in refs])

    # batched trajectories: the hot loop
    ang = kernels.angular_trajectories(thetas, LIMIT_STEPS)
    ang_arcs = kernels.arcs_from_positions(ang, radius)
    devs = kernels.deviations(ang_arcs, circ)
    arc_traj = kernels.arc_trajectories(ang_arcs[:, 0, :], 30)

    for i, (t, ref) in enumerate(zip(tris, refs)):
        r = ref.circle.radius
        s = ref.circle.circumference
        l0 = arcs_of(ref)
        d = devs[i]

        checks["contraction"].record(
            max(abs(d[n + 1] - d[n] / 2) for n in range(40)) / (1 + d[0])
        )
        f = _rational_probe(l0)
        halves = closed = True
        g, dev_g = f, deviation(f)
        for n in range(41):
            if n <= 30:
                closed &= rational_iterate(f, n) == g
            g = rational_step(g)
            dev_next = deviation(g)
            halves &= dev_next == dev_g / 2
            dev_g = dev_next
        checks["contraction_exact"].record(0.0 if halves else math.inf)
        checks["closed_form_exact"].record(0.0 if closed else math.inf)

        worst = 0.0
        for n in range(31):
            for x, y in zip(iterate_arcs(l0, n), arc_traj[i, n]):
                worst = max(worst, _rel(x, y))
        checks["closed_form"].record(worst)

        checks["limit_arcs"].record(np.max(np.abs(ang_arcs[i, LIMIT_STEPS] - s / 3)))

        even, odd = limit_triangles(ref)
        lt = even.to_labeled()
        checks["limit_side_sqrt3R"].record(max(_rel(x, math.sqrt(3) * r) for x in lt.sides))
        checks["limit_side_heron"].record(
            max(_rel(x, math.sqrt(3) * circumradius_from_sides(*t.sides)) for x in lt.sides)
        )
        checks["antipodality"].record(
            max(abs(wrap_pi(o - e - math.pi)) for e, o in zip(even.thetas, odd.thetas))
        )
        checks["even_limit_vs_iteration"].record(
            max(abs(wrap_pi(e - x)) for e, x in zip(even.thetas, ang[i, LIMIT_STEPS]))
        )

        if d[0] < FIXED_POINT_RTOL * s:
            checks["measured_ratio"].skipped += 1
        else:
            ratios = [d[n + 1] / d[n] for n in range(LIMIT_STEPS) if d[n] > RATIO_FLOOR_RTOL * s]
            checks["measured_ratio"].record(abs(math.fsum(ratios) / len(ratios) - 0.5))

        alpha, beta, _ = angles_of(t)
        dr = drift(l0, LIMIT_STEPS)
        final = AngularTriangle(ref.circle, *ang[i, LIMIT_STEPS])
        checks["drift_limit_vs_iteration"].record(
            abs(measured_drift(ref, final) - dr.drift_limit) / r
        )
        rot = orientation_vs_reference(ref, even)
        checks["orientation_alpha_minus_beta_over_3"].record(abs(rot - (alpha - beta) / 3))

        m = morley(t)
        checks["morley_equilateral"].record(equilateral_defect(m))
        checks["morley_parallel_even_limit"].record(similarity(m, lt).max_parallel_residual)
        checks["morley_orientation"].record(abs(side_rotation(t, m) - rot))

        outer = napoleon(t, "outer")
        checks["napoleon_outer_equilateral"].record(equilateral_defect(outer))
        inner = napoleon(t, "inner")
        if isinstance(inner, DegenerateOutput):
            checks["napoleon_inner_equilateral"].skipped += 1
        else:
            checks["napoleon_inner_equilateral"].record(equilateral_defect(inner))
        checks["napoleon_outer_parallel_morley"].record(equilateral_offset(m, outer))

        ex, co = t, t
        for rank in (1, 2, 3):
            mid = midarc_triangle(t, rank)
            ex, co = excentral(ex), contact(co)
            for name, cand in (("excentral", ex), ("contact", co)):
                rep = similarity(mid, cand)
                checks[f"{name}_similar_parallel_rank{rank}"].record(
                    max(rep.max_angle_mismatch, rep.max_parallel_residual)
                )

        checks["bisectors_perpendicular"].record(
            max(
                abs(wrap_half_pi(e - n - math.pi / 2))
                for n, e in zip(internal_bisector_directions(t), external_bisector_directions(t))
            )
        )
        lhs = arcs_of(step_angular(ref))
        rhs = step_arcs(l0)
        checks["step_consistency"].record(
            max(abs(x - y) for x, y in zip(lhs, rhs)) / s
        )
        checks["circumradius_heron"].record(
            _rel(circumradius_from_sides(*t.sides), circumcircle(t).radius)
        )

    out = [c.to_dict() for c in checks.values()]
    return {
        "meta": {
            "version": _version(),
            "seed": seed,
            "samples": samples,
            "min_angle": min_angle,
            "tolerances": dict(TOLERANCES),
        },
        "records": out,
        "ok": all(c.ok for c in checks.values()),
    }


def _version() -> str:
    from midarc import __version__

    return __version__


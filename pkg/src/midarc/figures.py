"""Deterministic SVG rendering of triangle scenes.

Geometry is in math convention (y up); the y flip happens only while
writing coordinates. All numbers are written with six fractional digits,
so identical scenes always give identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union
from xml.sax.saxutils import escape, quoteattr

from midarc.arcs import (
    iterate_angular,
    limit_triangles,
    to_angular,
)
from midarc.classic import contact, excentral, incenter, inradius, morley, napoleon
from midarc.errors import EmptyScene
from midarc.euclid import TAU, Circle, LabeledTriangle, Point

MARGIN = 0.05
PRESETS = ("fig1", "fig2", "fig3", "fig4")


@dataclass(frozen=True)
class Style:
    stroke: str = "#000000"
    fill: str = "none"
    width: float = 1.0
    dash: Optional[str] = None


PALETTE = {
    "reference": Style("#000000", width=1.6),
    "circle": Style("#7f7f7f", width=0.8),
    "bisector": Style("#7f7f7f", width=0.7, dash="4 3"),
    "iterate": Style("#1f77b4", width=1.0),
    "limit": Style("#d62728", width=1.4),
    "limit_odd": Style("#ff7f0e", width=1.4),
    "morley": Style("#2ca02c", width=1.2),
    "napoleon": Style("#9467bd", width=1.2),
    "excentral": Style("#9467bd", width=1.0),
    "contact": Style("#8c564b", width=1.0),
    "incircle": Style("#8c564b", width=0.6, dash="2 2"),
    "highlight": Style("#e377c2", width=3.0),
    "drift": Style("#d62728", width=2.0, dash="6 2"),
    "vertex": Style("#000000", fill="#000000", width=0.5),
}


@dataclass(frozen=True)
class Polygon:
    points: tuple[Point, ...]


@dataclass(frozen=True)
class CircleShape:
    center: Point
    radius: float


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point


@dataclass(frozen=True)
class Dot:
    p: Point


@dataclass(frozen=True)
class Arc:
    """Counterclockwise arc from angle ``start`` through ``sweep`` radians."""

    center: Point
    radius: float
    start: float
    sweep: float


Shape = Union[Polygon, CircleShape, Segment, Dot, Arc]


@dataclass(frozen=True)
class Element:
    shape: Shape
    style: Style
    label: Optional[str] = None


def _bbox(shape: Shape) -> tuple[float, float, float, float]:
    if isinstance(shape, Polygon):
        xs = [p.x for p in shape.points]
        ys = [p.y for p in shape.points]
        return min(xs), min(ys), max(xs), max(ys)
    if isinstance(shape, CircleShape):
        c, r = shape.center, shape.radius
        return c.x - r, c.y - r, c.x + r, c.y + r
    if isinstance(shape, Segment):
        return (
            min(shape.p.x, shape.q.x),
            min(shape.p.y, shape.q.y),
            max(shape.p.x, shape.q.x),
            max(shape.p.y, shape.q.y),
        )
    if isinstance(shape, Dot):
        return shape.p.x, shape.p.y, shape.p.x, shape.p.y
    if isinstance(shape, Arc):
        angles = [shape.start, shape.start + shape.sweep]
        for k in range(4):
            a = k * math.pi / 2
            if (a - shape.start) % TAU <= shape.sweep:
                angles.append(a)
        xs = [shape.center.x + shape.radius * math.cos(a) for a in angles]
        ys = [shape.center.y + shape.radius * math.sin(a) for a in angles]
        return min(xs), min(ys), max(xs), max(ys)
    raise TypeError(f"unknown shape {shape!r}")


@dataclass(frozen=True)
class Scene:
    elements: tuple[Element, ...]
    viewport: tuple[float, float, float, float]

    def __post_init__(self):
        if not self.elements:
            raise EmptyScene("scene has no elements")
        x0, y0, x1, y1 = self.viewport
        if not (x1 > x0 and y1 > y0):
            raise ValueError(f"empty viewport {self.viewport}")
        for el in self.elements:
            bx0, by0, bx1, by1 = _bbox(el.shape)
            if not (x0 < bx0 and y0 < by0 and bx1 < x1 and by1 < y1):
                raise ValueError(f"{el.shape!r} is not inside viewport {self.viewport}")

    @classmethod
    def fit(cls, elements) -> Scene:
        """Scene whose viewport pads the content by 5% of its larger half-extent."""
        elements = tuple(elements)
        if not elements:
            raise EmptyScene("scene has no elements")
        boxes = [_bbox(e.shape) for e in elements]
        x0 = min(b[0] for b in boxes)
        y0 = min(b[1] for b in boxes)
        x1 = max(b[2] for b in boxes)
        y1 = max(b[3] for b in boxes)
        half = max(x1 - x0, y1 - y0) / 2 or 1.0
        pad = MARGIN * half
        return cls(elements, (x0 - pad, y0 - pad, x1 + pad, y1 + pad))


def _num(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _xy(p: Point) -> tuple[str, str]:
    return _num(p.x), _num(-p.y)


def _style_attrs(style: Style, unit: float) -> str:
    attrs = f'stroke="{style.stroke}" fill="{style.fill}" stroke-width="{_num(style.width * unit)}"'
    if style.dash:
        dash = " ".join(_num(float(d) * unit) for d in style.dash.split())
        attrs += f' stroke-dasharray="{dash}"'
    return attrs


def _label_anchor(shape: Shape) -> Point:
    if isinstance(shape, Polygon):
        return shape.points[0]
    if isinstance(shape, CircleShape):
        return Point(shape.center.x, shape.center.y + shape.radius)
    if isinstance(shape, Segment):
        return shape.q
    if isinstance(shape, Dot):
        return shape.p
    mid = shape.start + shape.sweep / 2
    return Point(
        shape.center.x + shape.radius * math.cos(mid),
        shape.center.y + shape.radius * math.sin(mid),
    )


def _shape_svg(shape: Shape, attrs: str, unit: float) -> str:
    if isinstance(shape, Polygon):
        pts = " ".join(",".join(_xy(p)) for p in shape.points)
        return f'<polygon points="{pts}" {attrs}/>'
    if isinstance(shape, CircleShape):
        cx, cy = _xy(shape.center)
        return f'<circle cx="{cx}" cy="{cy}" r="{_num(shape.radius)}" {attrs}/>'
    if isinstance(shape, Segment):
        x1, y1 = _xy(shape.p)
        x2, y2 = _xy(shape.q)
        return f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {attrs}/>'
    if isinstance(shape, Dot):
        cx, cy = _xy(shape.p)
        return f'<circle cx="{cx}" cy="{cy}" r="{_num(2.0 * unit)}" {attrs}/>'
    c, r = shape.center, shape.radius
    a0, a1 = shape.start, shape.start + shape.sweep
    x0, y0 = _xy(Point(c.x + r * math.cos(a0), c.y + r * math.sin(a0)))
    x1, y1 = _xy(Point(c.x + r * math.cos(a1), c.y + r * math.sin(a1)))
    large = 1 if shape.sweep > math.pi else 0
    # counterclockwise in math coordinates is sweep-flag 0 once y is flipped
    d = f"M {x0} {y0} A {_num(r)} {_num(r)} 0 {large} 0 {x1} {y1}"
    return f'<path d="{d}" {attrs}/>'


def render(scene: Scene) -> bytes:
    if not scene.elements:
        raise EmptyScene("scene has no elements")
    x0, y0, x1, y1 = scene.viewport
    w, h = x1 - x0, y1 - y0
    unit = max(w, h) / 400.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_num(x0)} {_num(-y1)} {_num(w)} {_num(h)}" '
        f'width="{_num(400.0 * w / max(w, h))}" height="{_num(400.0 * h / max(w, h))}">',
        '<g stroke-linejoin="round" stroke-linecap="round">',
    ]
    for el in scene.elements:
        lines.append(_shape_svg(el.shape, _style_attrs(el.style, unit), unit))
        if el.label:
            anchor = _label_anchor(el.shape)
            ax, ay = _xy(anchor)
            # right-half labels grow leftward so they stay inside the viewBox
            side = "end" if anchor.x > (x0 + x1) / 2 else "start"
            lines.append(
                f'<text x="{ax}" y="{ay}" text-anchor="{side}" font-family="sans-serif" '
                f'font-size="{_num(12.0 * unit)}" fill={quoteattr(el.style.stroke)}>'
                f"{escape(el.label)}</text>"
            )
    lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _tri(t: LabeledTriangle, role: str, label: Optional[str] = None) -> Element:
    return Element(Polygon(t.vertices), PALETTE[role], label)


def _vertex_labels(t: LabeledTriangle) -> list[Element]:
    return [Element(Dot(p), PALETTE["vertex"], name) for p, name in zip(t.vertices, "ABC")]


def _circle(c: Circle, role: str = "circle") -> Element:
    return Element(CircleShape(c.center, c.radius), PALETTE[role])


def fig1(t: LabeledTriangle) -> Scene:
    """Reference triangle with its Morley and outer Napoleon triangles."""
    return Scene.fit(
        [
            _tri(t, "reference"),
            _tri(morley(t), "morley", "Morley"),
            _tri(napoleon(t, "outer"), "napoleon", "Napoleon"),
            *_vertex_labels(t),
        ]
    )


def fig2(t: LabeledTriangle) -> Scene:
    """Circumcircle, the bisectors meeting on it, and iterates 1 to 4."""
    ref = to_angular(t)
    circle = ref.circle
    first = iterate_angular(ref, 1).to_labeled()
    elements = [_circle(circle), _tri(t, "reference")]
    for vertex, mid in zip(t.vertices, first.vertices):
        elements.append(Element(Segment(circle.center, mid), PALETTE["bisector"]))
        elements.append(Element(Segment(vertex, mid), PALETTE["bisector"]))
    for n in range(1, 5):
        elements.append(_tri(iterate_angular(ref, n).to_labeled(), "iterate", f"n={n}"))
    elements.extend(_vertex_labels(t))
    return Scene.fit(elements)


def fig3(t: LabeledTriangle) -> Scene:
    """Contact, excentral and first mid-arc triangles."""
    ref = to_angular(t)
    return Scene.fit(
        [
            _circle(ref.circle),
            Element(CircleShape(incenter(t), inradius(t)), PALETTE["incircle"]),
            _tri(t, "reference"),
            _tri(contact(t), "contact", "contact"),
            _tri(excentral(t), "excentral", "excentral"),
            _tri(iterate_angular(ref, 1).to_labeled(), "iterate", "n=1"),
            *_vertex_labels(t),
        ]
    )


def fig4(t: LabeledTriangle) -> Scene:
    """Even and odd limit triangles next to the Morley triangle.

    Side c of each equilateral triangle is overdrawn to show that they are
    parallel, and the drift of vertex C is drawn as an arc.
    """
    ref = to_angular(t)
    even, odd = limit_triangles(ref)
    le, lo, m = even.to_labeled(), odd.to_labeled(), morley(t)
    start = ref.theta_c
    sweep = (even.theta_c - start) % TAU
    if sweep > math.pi:
        start, sweep = even.theta_c, TAU - sweep
    elements = [
        _circle(ref.circle),
        _tri(t, "reference"),
        _tri(le, "limit", "even"),
        _tri(lo, "limit_odd", "odd"),
        _tri(m, "morley", "Morley"),
    ]
    for tri in (le, lo, m):
        elements.append(Element(Segment(tri.A, tri.B), PALETTE["highlight"]))
    if sweep > 0:
        elements.append(
            Element(Arc(ref.circle.center, ref.circle.radius, start, sweep), PALETTE["drift"])
        )
    elements.extend(_vertex_labels(t))
    return Scene.fit(elements)


_BUILDERS = {"fig1": fig1, "fig2": fig2, "fig3": fig3, "fig4": fig4}


def preset(name: str, t: LabeledTriangle) -> Scene:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown figure {name!r}; choose from {', '.join(PRESETS)}") from None
    return builder(t)

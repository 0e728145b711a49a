import math
import xml.etree.ElementTree as ET

import pytest

from midarc.analysis import random_triangles, side_rotation
from midarc.arcs import limit_triangles, to_angular
from midarc.classic import contact, excentral
from midarc.errors import EmptyScene
from midarc.euclid import LabeledTriangle, Point
from midarc.figures import (
    PALETTE,
    PRESETS,
    Arc,
    CircleShape,
    Element,
    Polygon,
    Scene,
    Segment,
    preset,
    render,
)

SVG = "{http://www.w3.org/2000/svg}"
EQUI = LabeledTriangle.from_coords([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)])
RIGHT = LabeledTriangle.from_coords([(0, 0), (2, 0), (0, 2)])


def unit_circle_scene():
    return Scene.fit([Element(CircleShape(Point(0, 0), 1.0), PALETTE["circle"])])


def test_render_unit_circle():
    svg = render(unit_circle_scene())
    root = ET.fromstring(svg)
    assert root.get("viewBox") == "-1.050000 -1.050000 2.100000 2.100000"
    circles = root.findall(f".//{SVG}circle")
    assert len(circles) == 1
    assert circles[0].get("r") == "1.000000"


def test_render_deterministic():
    assert render(unit_circle_scene()) == render(unit_circle_scene())


def test_empty_scene():
    with pytest.raises(EmptyScene):
        Scene.fit([])
    with pytest.raises(EmptyScene):
        Scene((), (0, 0, 1, 1))


def test_viewport_must_contain_elements():
    el = Element(Segment(Point(0, 0), Point(2, 0)), PALETTE["reference"])
    with pytest.raises(ValueError):
        Scene((el,), (0, -1, 2, 1))
    Scene((el,), (-0.1, -1, 2.1, 1))


def test_fit_margin_at_least_five_percent():
    scene = preset("fig2", RIGHT)
    x0, y0, x1, y1 = scene.viewport
    half = max(x1 - x0, y1 - y0) / 2
    # content box from the circumcircle, the widest element here
    assert (x1 - x0) / 2 >= half * 0.99
    circle = [e.shape for e in scene.elements if isinstance(e.shape, CircleShape)][0]
    assert circle.center.x - circle.radius - x0 >= 0.05 * circle.radius * 0.999


def test_y_axis_flipped_only_at_render():
    el = Element(Segment(Point(0, 0), Point(0, 1)), PALETTE["reference"])
    root = ET.fromstring(render(Scene.fit([el])))
    line = root.find(f".//{SVG}line")
    assert line.get("y2") == "-1.000000"


def test_arc_bbox_and_path():
    arc = Arc(Point(0, 0), 1.0, -0.2, 0.4)
    scene = Scene.fit([Element(arc, PALETTE["drift"])])
    x0, y0, x1, y1 = scene.viewport
    assert x1 > 1.0 and x0 > 0.9
    path = ET.fromstring(render(scene)).find(f".//{SVG}path")
    assert " 0 0 0 " in path.get("d")


def test_label_is_escaped():
    el = Element(Polygon(EQUI.vertices), PALETTE["reference"], "a<b & c")
    root = ET.fromstring(render(Scene.fit([el])))
    assert root.find(f".//{SVG}text").text == "a<b & c"


@pytest.mark.parametrize("name", PRESETS)
def test_presets_well_formed_over_samples(name):
    for t in random_triangles(3, 20):
        a = render(preset(name, t))
        assert ET.fromstring(a).tag == f"{SVG}svg"
        assert a == render(preset(name, t))


def test_unknown_preset():
    with pytest.raises(ValueError):
        preset("fig9", EQUI)


def test_fig1_equilateral_concentric():
    scene = preset("fig1", EQUI)
    tris = [e.shape for e in scene.elements if isinstance(e.shape, Polygon)]
    assert len(tris) == 3
    centers = [
        (sum(p.x for p in t.points) / 3, sum(p.y for p in t.points) / 3) for t in tris
    ]
    for c in centers[1:]:
        assert c == pytest.approx(centers[0], abs=1e-14)
    for t in tris:
        lt = LabeledTriangle(*t.points)
        assert max(lt.sides) - min(lt.sides) <= 1e-14


def test_fig2_contents():
    scene = preset("fig2", RIGHT)
    labels = [e.label for e in scene.elements if e.label]
    assert [l for l in labels if l.startswith("n=")] == ["n=1", "n=2", "n=3", "n=4"]
    assert sum(isinstance(e.shape, Segment) for e in scene.elements) == 6


def test_fig3_contact_excentral_parallel():
    scene = preset("fig3", RIGHT)
    by_label = {e.label: LabeledTriangle(*e.shape.points) for e in scene.elements if isinstance(e.shape, Polygon) and e.label}
    assert set(by_label) == {"contact", "excentral", "n=1"}
    assert by_label["contact"] == contact(RIGHT)
    assert by_label["excentral"] == excentral(RIGHT)
    for x, y in zip(by_label["contact"].side_directions(), by_label["excentral"].side_directions()):
        assert abs(math.remainder(x - y, math.pi)) <= 1e-12


def test_fig4_limit_rotation():
    ref = LabeledTriangle(*(Point(math.cos(a), math.sin(a)) for a in (math.pi / 2, 5 * math.pi / 6, 11 * math.pi / 6)))
    scene = preset("fig4", ref)
    even = [e for e in scene.elements if e.label == "even"][0]
    rot = side_rotation(ref, LabeledTriangle(*even.shape.points))
    assert rot == pytest.approx(math.pi / 18, abs=1e-12)
    arcs = [e.shape for e in scene.elements if isinstance(e.shape, Arc)]
    assert len(arcs) == 1 and arcs[0].sweep == pytest.approx(math.pi / 9, abs=1e-12)

"""Command-line front end: ``midarc iterate | verify | render``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 degenerate
input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from midarc import __version__
from midarc.analysis import TOLERANCES, verify_suite
from midarc.arcs import (
    AngularTriangle,
    RationalArcTriple,
    arcs_of,
    deviation,
    measured_drift,
    rational_positions,
    rational_step,
    rational_step_positions,
    step_angular,
    to_angular,
)
from midarc.errors import DegenerateTriangle
from midarc.euclid import TAU, Circle, LabeledTriangle, Point
from midarc.figures import PRESETS, preset, render

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

CSV_COLUMNS = ("rank", "l_a", "l_b", "l_c", "deviation", "drift_ab")


class UsageError(Exception):
    pass


def _equilateral() -> LabeledTriangle:
    start = math.pi / 2
    return LabeledTriangle(
        *(Point(math.cos(start + k * TAU / 3), math.sin(start + k * TAU / 3)) for k in range(3))
    )


def parse_vertices(text: str) -> LabeledTriangle:
    if text.strip() == "equilateral":
        return _equilateral()
    try:
        coords = [tuple(float(v) for v in pair.split(",")) for pair in text.split()]
    except ValueError as exc:
        raise UsageError(f"bad --vertices {text!r}: {exc}") from None
    if len(coords) != 3 or any(len(c) != 2 for c in coords):
        raise UsageError(f'--vertices needs three "x,y" pairs, got {text!r}')
    # LabeledTriangle raises DegenerateTriangle for collinear input
    return LabeledTriangle.from_coords(coords)


def _parse_floats(text: str, flag: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"bad {flag} {text!r}") from None
    if len(values) != 3:
        raise UsageError(f"{flag} needs three comma-separated values, got {text!r}")
    return values


def triangle_from_angles(alpha: float, beta: float, gamma: float, radius: float = 1.0):
    """Counterclockwise triangle with the given angles on a circle at the origin."""
    if abs(alpha + beta + gamma - math.pi) > 1e-9:
        raise UsageError(f"angles must sum to pi, got {alpha + beta + gamma}")
    if min(alpha, beta, gamma) <= 0:
        raise DegenerateTriangle(f"non-positive angle in {(alpha, beta, gamma)}")
    circle = Circle(Point(0.0, 0.0), radius)
    ta = math.pi / 2
    tb = ta + 2 * gamma
    tc = tb + 2 * alpha
    return AngularTriangle(circle, ta, tb, tc).to_labeled()


def _parse_arcs(text: str) -> RationalArcTriple:
    try:
        return RationalArcTriple.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --arcs {text!r}: {exc}") from None


def triangle_from_args(args) -> LabeledTriangle:
    given = [n for n in ("vertices", "angles", "arcs") if getattr(args, n, None)]
    if len(given) != 1:
        raise UsageError("give exactly one of --vertices, --angles, --arcs")
    if args.vertices:
        return parse_vertices(args.vertices)
    if args.radius <= 0:
        raise UsageError("--radius must be positive")
    if args.angles:
        values = _parse_floats(args.angles, "--angles")
        if args.unit == "deg":
            values = [math.radians(v) for v in values]
        return triangle_from_angles(*values, radius=args.radius)
    f = _parse_arcs(args.arcs)
    return triangle_from_angles(*(float(x) * math.pi for x in f), radius=args.radius)


def _add_triangle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--vertices", help='"x,y x,y x,y" or the keyword "equilateral"')
    p.add_argument("--angles", help="a,b,g interior angles (see --unit)")
    p.add_argument("--arcs", help="p/q,p/q,p/q arc fractions of the circumference")
    p.add_argument("--radius", type=float, default=1.0, help="circumradius for --angles/--arcs")
    p.add_argument("--unit", choices=("rad", "deg"), default="rad")


def _fraction_text(f: Fraction) -> str:
    return str(f)


def iterate_records_exact(f: RationalArcTriple, steps: int) -> list[dict]:
    records = []
    pos = rational_positions(f)
    start_c = pos[2]
    g = f
    for n in range(steps + 1):
        # toward B is clockwise here since the exact triangle is ccw
        drift_ab = None
        if n % 2 == 0:
            shift = (pos[2] - start_c + Fraction(1, 2)) % 1 - Fraction(1, 2)
            drift_ab = _fraction_text(-shift)
        records.append(
            {
                "rank": n,
                "l_a": _fraction_text(g.f_a),
                "l_b": _fraction_text(g.f_b),
                "l_c": _fraction_text(g.f_c),
                "deviation": _fraction_text(deviation(g)),
                "drift_ab": drift_ab,
                "positions": [_fraction_text(p) for p in pos],
            }
        )
        g = rational_step(g)
        pos = rational_step_positions(pos)
    return records


def iterate_records(t: LabeledTriangle, steps: int) -> list[dict]:
    ref = to_angular(t)
    cur = ref
    records = []
    for n in range(steps + 1):
        l = arcs_of(cur)
        records.append(
            {
                "rank": n,
                "l_a": l.l_a,
                "l_b": l.l_b,
                "l_c": l.l_c,
                "deviation": deviation(l),
                "drift_ab": measured_drift(ref, cur) if n % 2 == 0 else None,
                "positions": list(cur.thetas),
            }
        )
        cur = step_angular(cur)
    return records


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(["" if r[k] is None else r[k] for k in CSV_COLUMNS])
    return buf.getvalue()


def _to_json(meta: dict, records: list) -> str:
    return json.dumps({"meta": meta, "records": records}, indent=2) + "\n"


def cmd_iterate(args) -> int:
    if args.steps < 0:
        raise UsageError("--steps must be nonnegative")
    if args.exact:
        if not args.arcs or args.vertices or args.angles:
            raise UsageError("--exact requires --arcs p/q,p/q,p/q")
        records = iterate_records_exact(_parse_arcs(args.arcs), args.steps)
        units = "fraction of circumference"
    else:
        records = iterate_records(triangle_from_args(args), args.steps)
        units = "length"
    meta = {
        "version": __version__,
        "seed": None,
        "tolerances": dict(TOLERANCES),
        "exact": bool(args.exact),
        "units": units,
    }
    text = _to_csv(records) if args.format == "csv" else _to_json(meta, records)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    report = verify_suite(args.samples, args.seed, args.min_angle)
    meta = report["meta"]
    meta["ok"] = report["ok"]
    _emit(_to_json(meta, report["records"]), args.out)
    if not report["ok"]:
        failed = [r["name"] for r in report["records"] if not r["ok"]]
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_render(args) -> int:
    if args.figure not in PRESETS:
        raise UsageError(f"unknown figure {args.figure!r}; choose from {', '.join(PRESETS)}")
    t = triangle_from_args(args)
    Path(args.out).write_bytes(render(preset(args.figure, t)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midarc", description="Mid-arc iteration of a triangle on its circumcircle."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("iterate", help="iterate the mid-arc map and report each rank")
    _add_triangle_args(p)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--exact", action="store_true", help="exact rational mode (needs --arcs)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("verify", help="run the invariant suite over seeded random triangles")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--min-angle", type=float, default=0.1)
    p.add_argument("--out", help="write JSON to file instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write one of the preset figures as SVG")
    p.add_argument("--figure", required=True, help=f"one of {', '.join(PRESETS)}")
    _add_triangle_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"midarc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateTriangle as exc:
        print(f"midarc: degenerate triangle: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"midarc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

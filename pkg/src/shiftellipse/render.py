"""SVG, CSV and JSON documents for plotted polylines.

Output is byte-for-byte deterministic: coordinates come from exact
``raw / 65536`` division printed with four decimals, JSON keys are sorted,
and nothing time- or host-dependent is written.  SVG keeps the input
coordinates as given, so y grows downward on screen.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .ellipse import Polyline
from .fixed import format_fixed


@dataclass
class Curve:
    """A polyline plus the metadata written next to it."""

    name: str
    polyline: Polyline
    meta: dict = field(default_factory=dict)
    # wedge outlines start and end at a hub point (pie charts)
    hub: tuple[int, int] | None = None


def _path_data(c: Curve) -> str:
    pts = c.polyline.points
    parts = []
    if c.hub is not None:
        parts.append(f"M {format_fixed(c.hub[0])} {format_fixed(c.hub[1])}")
        parts.extend(f"L {format_fixed(x)} {format_fixed(y)}" for x, y in pts)
        parts.append("Z")
        return " ".join(parts)
    x0, y0 = pts[0]
    parts.append(f"M {format_fixed(x0)} {format_fixed(y0)}")
    parts.extend(f"L {format_fixed(x)} {format_fixed(y)}" for x, y in pts[1:])
    if c.polyline.closed:
        parts.append("Z")
    return " ".join(parts)


def _bounds(curves: list[Curve], margin_px: float):
    xs, ys = [], []
    for c in curves:
        for x, y in c.polyline.points:
            xs.append(x)
            ys.append(y)
        if c.hub is not None:
            xs.append(c.hub[0])
            ys.append(c.hub[1])
    m = int(margin_px * 65536)
    return min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m


def svg_document(curves: list[Curve], margin_px: float = 10.0, stroke_width: float = 1.0) -> str:
    x0, y0, x1, y1 = _bounds(curves, margin_px)
    w, h = format_fixed(x1 - x0), format_fixed(y1 - y0)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{format_fixed(x0)} {format_fixed(y0)} {w} {h}" width="{w}" height="{h}">',
    ]
    for c in curves:
        fill = c.meta.get("fill", "none")
        lines.append(
            f'  <path id="{c.name}" d="{_path_data(c)}" fill="{fill}" '
            f'stroke="black" stroke-width="{stroke_width:g}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def csv_document(curves: list[Curve]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["curve", "index", "x", "y", "x_raw", "y_raw"])
    for c in curves:
        for i, (x, y) in enumerate(c.polyline.points):
            w.writerow([c.name, i, format_fixed(x), format_fixed(y), x, y])
    return buf.getvalue()


def json_document(curves: list[Curve], meta: dict | None = None) -> str:
    doc = {
        "meta": meta or {},
        "curves": [
            {
                "name": c.name,
                "closed": c.polyline.closed,
                "k": c.polyline.k,
                "meta": {k: v for k, v in c.meta.items() if k != "fill"},
                "points": [[format_fixed(x), format_fixed(y)] for x, y in c.polyline.points],
                "points_raw": [[x, y] for x, y in c.polyline.points],
            }
            for c in curves
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def render(curves: list[Curve], fmt: str, meta: dict | None = None) -> str:
    if fmt == "svg":
        return svg_document(curves)
    if fmt == "csv":
        return csv_document(curves)
    if fmt == "json":
        return json_document(curves, meta)
    raise ValueError(f"unknown format {fmt!r}")

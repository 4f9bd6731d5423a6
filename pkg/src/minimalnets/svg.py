"""Deterministic SVG rendering of drawn networks.

One drawing unit maps to 40px.  Attaching points render as open circles,
internal vertices as filled ones.  All numbers are emitted with a fixed
format so identical graphs produce byte-identical files.
"""

from __future__ import annotations

from typing import List

from .graph import PlaneGraph, VertexKind

UNIT = 40.0
MARGIN = 30.0
RADIUS = 4.5


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def render_svg(g: PlaneGraph, unit: float = UNIT) -> str:
    pts = {v.id: g.euclid(v.id) for v in g.vertices}
    xs = [p.x for p in pts.values()]
    ys = [p.y for p in pts.values()]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    width = (xmax - xmin) * unit + 2 * MARGIN
    height = (ymax - ymin) * unit + 2 * MARGIN

    def sx(x: float) -> float:
        return (x - xmin) * unit + MARGIN

    def sy(y: float) -> float:
        return (ymax - y) * unit + MARGIN  # flip: SVG y grows downward

    lines: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    for i, j in sorted(g.edges):
        a, b = pts[i], pts[j]
        lines.append(
            f'  <line x1="{_fmt(sx(a.x))}" y1="{_fmt(sy(a.y))}" '
            f'x2="{_fmt(sx(b.x))}" y2="{_fmt(sy(b.y))}" stroke="black" stroke-width="2"/>'
        )
    for v in sorted(g.vertices, key=lambda v: v.id):
        p = pts[v.id]
        if v.kind is VertexKind.ATTACHING:
            style = 'fill="white" stroke="black" stroke-width="1.5"'
        else:
            style = 'fill="black"'
        lines.append(
            f'  <circle cx="{_fmt(sx(p.x))}" cy="{_fmt(sy(p.y))}" r="{_fmt(RADIUS)}" {style}/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

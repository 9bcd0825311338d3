"""Standalone SVG figures for planar fans, loops and winding heatmaps.

The lattice is drawn at a fixed 24 pixels per unit inside a viewport
computed from the object plus one unit of margin, so identical inputs
render byte-identical files.  Rays become arrows from the origin, loops
become stroked paths, lattice points become dots, and the heatmap
shades each unit cell by the winding number at its center.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, PointOnBoundaryError
from .fans import MultiFan
from .polytopes import MultiPolytope, OrientedLoop, boundary_loop, winding_number

__all__ = ["render_svg"]

SCALE = 24


def _fmt(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return repr(round(float(f), 3))


class _Canvas:
    def __init__(self, xmin, xmax, ymin, ymax):
        self.xmin, self.xmax = xmin - 1, xmax + 1
        self.ymin, self.ymax = ymin - 1, ymax + 1
        self.width = (self.xmax - self.xmin) * SCALE
        self.height = (self.ymax - self.ymin) * SCALE
        self.parts = []

    def px(self, x, y):
        return ((Fraction(x) - self.xmin) * SCALE,
                (self.ymax - Fraction(y)) * SCALE)

    def add(self, element):
        self.parts.append(element)

    def lattice_dots(self):
        for x in range(self.xmin, self.xmax + 1):
            for y in range(self.ymin, self.ymax + 1):
                cx, cy = self.px(x, y)
                self.add(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="1.5" fill="#888"/>')

    def finish(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
                f'width="{self.width}" height="{self.height}" '
                f'viewBox="0 0 {self.width} {self.height}">')
        return "\n".join([head, *self.parts, "</svg>"])


def _heat_color(w: int) -> str:
    if w == 0:
        return ""
    base = "#2b6cb0" if w > 0 else "#c53030"
    opacity = min(20 * abs(w), 90)
    return f'fill="{base}" fill-opacity="0.{opacity:02d}"'


def _arrow(canvas, tip):
    x0, y0 = canvas.px(0, 0)
    x1, y1 = canvas.px(tip[0], tip[1])
    canvas.add(f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" '
               f'stroke="#111" stroke-width="2"/>')
    # arrow head: two short lines rotated around the tip direction
    dx, dy = x1 - x0, y1 - y0
    norm2 = dx * dx + dy * dy
    if norm2 == 0:
        return
    for sign in (1, -1):
        hx = -dx * Fraction(1, 4) + sign * dy * Fraction(1, 6)
        hy = -dy * Fraction(1, 4) - sign * dx * Fraction(1, 6)
        scale = Fraction(SCALE * SCALE, norm2)
        if scale > 1:
            scale = Fraction(1)
        canvas.add(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                   f'x2="{_fmt(x1 + hx * scale)}" y2="{_fmt(y1 + hy * scale)}" '
                   f'stroke="#111" stroke-width="2"/>')


def _fan_svg(mf: MultiFan) -> str:
    if mf.n != 2:
        raise InputError("only planar fans can be drawn")
    xs = [r[0] for r in mf.rays.rays] + [0]
    ys = [r[1] for r in mf.rays.rays] + [0]
    canvas = _Canvas(min(xs), max(xs), min(ys), max(ys))
    canvas.lattice_dots()
    for i, ray in enumerate(mf.rays.rays, start=1):
        _arrow(canvas, ray)
        lx, ly = canvas.px(ray[0], ray[1])
        canvas.add(f'<text x="{_fmt(lx + 4)}" y="{_fmt(ly - 4)}" '
                   f'font-size="11">v{i}</text>')
    return canvas.finish()


def _loop_svg(loop: OrientedLoop, heatmap: bool) -> str:
    xs = [v[0] for v in loop.vertices]
    ys = [v[1] for v in loop.vertices]
    from math import ceil, floor
    canvas = _Canvas(floor(min(xs)), ceil(max(xs)), floor(min(ys)), ceil(max(ys)))
    if heatmap:
        for x in range(canvas.xmin, canvas.xmax):
            for y in range(canvas.ymin, canvas.ymax):
                center = (Fraction(2 * x + 1, 2), Fraction(2 * y + 1, 2))
                try:
                    w = winding_number(loop, center)
                except PointOnBoundaryError:
                    continue
                color = _heat_color(w)
                if not color:
                    continue
                px, py = canvas.px(x, y + 1)
                canvas.add(f'<rect x="{_fmt(px)}" y="{_fmt(py)}" '
                           f'width="{SCALE}" height="{SCALE}" {color}/>')
    canvas.lattice_dots()
    points = " ".join(f"{_fmt(canvas.px(v[0], v[1])[0])},{_fmt(canvas.px(v[0], v[1])[1])}"
                      for v in loop.vertices)
    canvas.add(f'<polygon points="{points}" fill="none" stroke="#111" stroke-width="2"/>')
    return canvas.finish()


def render_svg(obj, path=None, heatmap=False) -> str:
    """Render a planar fan, multi-polytope boundary or loop to SVG text;
    optionally write it to ``path``."""
    if isinstance(obj, MultiFan):
        svg = _fan_svg(obj)
    elif isinstance(obj, MultiPolytope):
        svg = _loop_svg(boundary_loop(obj), heatmap)
    elif isinstance(obj, OrientedLoop):
        svg = _loop_svg(obj, heatmap)
    else:
        svg = _loop_svg(OrientedLoop(obj), heatmap)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(svg + "\n")
    return svg

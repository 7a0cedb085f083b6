"""Deterministic SVG output for vertically projected circles.

Only an <svg> root and <polyline> children are emitted; coordinates carry 9
significant digits, so a fixed input gives a byte-identical file.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import quoteattr

Point = tuple[float, float]

FINITE_STYLE = 'fill="none" stroke="#1f3a93" stroke-width="{w}" stroke-linejoin="round"'
INFINITE_STYLE = 'fill="none" stroke="#b03a2e" stroke-width="{w}"'


def fmt(x: float) -> str:
    s = format(x, ".9g")
    return "0" if s == "-0" else s


@dataclass(frozen=True)
class Viewport:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    @classmethod
    def fit(cls, curves: Sequence[Sequence[Point]], margin: float = 0.05, default: float = 2.0) -> Viewport:
        xs = [p[0] for c in curves for p in c]
        ys = [p[1] for c in curves for p in c]
        if not xs:
            return cls(-default, -default, default, default)
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, 1e-6)
        pad = margin * span
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        half = span / 2 + pad
        return cls(cx - half, cy - half, cx + half, cy + half)


def clip_line(p: Point, q: Point, vp: Viewport) -> tuple[Point, Point] | None:
    """The part of the infinite line through p and q inside the viewport (Liang-Barsky)."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dx == 0 and dy == 0:
        return None
    lo, hi = float("-inf"), float("inf")
    for delta, start, a, b in ((dx, p[0], vp.xmin, vp.xmax), (dy, p[1], vp.ymin, vp.ymax)):
        if delta == 0:
            if not a <= start <= b:
                return None
            continue
        t0, t1 = (a - start) / delta, (b - start) / delta
        if t0 > t1:
            t0, t1 = t1, t0
        lo, hi = max(lo, t0), min(hi, t1)
    if lo >= hi:
        return None
    return (p[0] + lo * dx, p[1] + lo * dy), (p[0] + hi * dx, p[1] + hi * dy)


def _points_attr(points: Sequence[Point]) -> str:
    # SVG y grows downwards
    return " ".join(f"{fmt(x)},{fmt(-y)}" for x, y in points)


def render_svg(
    finite: Sequence[Sequence[Point]],
    infinite: Sequence[tuple[Point, Point]],
    size: int = 800,
    title: str | None = None,
    viewport: Viewport | None = None,
) -> str:
    """SVG text with one closed polyline per finite curve and one clipped segment per infinite line."""
    vp = viewport or Viewport.fit(finite)
    stroke = fmt(vp.width / size * 1.2)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="{fmt(vp.xmin)} {fmt(-vp.ymax)} {fmt(vp.width)} {fmt(vp.height)}"'
        + (f" aria-label={quoteattr(title)}" if title else "")
        + ">",
    ]
    for curve in finite:
        pts = list(curve) + [curve[0]]
        lines.append(f'  <polyline {FINITE_STYLE.format(w=stroke)} points="{_points_attr(pts)}"/>')
    for p, q in infinite:
        seg = clip_line(p, q, vp)
        if seg is not None:
            lines.append(f'  <polyline {INFINITE_STYLE.format(w=stroke)} points="{_points_attr(seg)}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

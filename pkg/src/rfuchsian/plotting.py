"""Optional matplotlib rendering of the same projected curves as the SVG writer."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .svg import Point, Viewport, clip_line


def render_png(
    finite: Sequence[Sequence[Point]],
    infinite: Sequence[tuple[Point, Point]],
    path: str | Path,
    title: str | None = None,
    dpi: int = 150,
) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    vp = Viewport.fit(finite)
    fig, ax = plt.subplots(figsize=(6, 6))
    for curve in finite:
        xs = [p[0] for p in curve] + [curve[0][0]]
        ys = [p[1] for p in curve] + [curve[0][1]]
        ax.plot(xs, ys, color="#1f3a93", lw=0.6)
    for p, q in infinite:
        seg = clip_line(p, q, vp)
        if seg is not None:
            ax.plot([seg[0][0], seg[1][0]], [seg[0][1], seg[1][1]], color="#b03a2e", lw=0.6)
    ax.set_xlim(vp.xmin, vp.xmax)
    ax.set_ylim(vp.ymin, vp.ymax)
    ax.set_aspect("equal")
    ax.set_xlabel("Re zeta")
    ax.set_ylabel("Im zeta")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=dpi, metadata={"Software": None})
    plt.close(fig)
    return out

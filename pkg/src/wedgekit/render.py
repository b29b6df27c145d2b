"""SVG pictures of wedge families and their common intersection.

Coordinates are printed as decimals; nothing here feeds back into the exact
computations.
"""

from __future__ import annotations

from fractions import Fraction

from .algorithms.general import threshold_cells
from .geometry import Point


def _fmt(v: Fraction, precision: int) -> str:
    s = f"{float(v):.{precision}f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def render_svg(wedges, width: int = 600, precision: int = 3) -> str:
    """Bounding lines of every wedge over the arrangement box, with the faces
    of the common intersection filled."""
    wedges = list(wedges)
    nb = sum(1 for d in wedges if d.is_bowtie)
    arr, cells, _, witnesses = threshold_cells(wedges, nb, len(wedges) - nb)
    x0, x1, y0, y1 = arr.box
    k = Fraction(width) / (x1 - x0)
    height = int((y1 - y0) * k) + 1

    def px(p) -> str:
        return f"{_fmt((p.x - x0) * k, precision)},{_fmt((y1 - p.y) * k, precision)}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white" stroke="black"/>',
    ]
    for f in cells.faces.tolist():
        pts = " ".join(px(arr.vertex_point(int(arr.origin[h]))) for h in arr.face_cycle(f))
        out.append(f'<polygon points="{pts}" fill="#9ecae1" stroke="none"/>')
    for e in cells.edges.tolist():
        a, b = arr.vertex_point(int(arr.edge_u[e])), arr.vertex_point(int(arr.edge_v[e]))
        out.append(f'<polyline points="{px(a)} {px(b)}" stroke="#08519c" stroke-width="3"/>')
    for d in wedges:
        colour = "#d62728" if d.is_bowtie else "#2ca02c"
        dash = "" if d.closed else ' stroke-dasharray="4 3"'
        for line in d.lines:
            a, b = Point(x0, line.at(x0)), Point(x1, line.at(x1))
            out.append(f'<polyline points="{px(a)} {px(b)}" stroke="{colour}" stroke-width="1"{dash}/>')
    for w in witnesses:
        x, y = px(w).split(",")
        out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Deterministic SVG rendering of path collections."""
from __future__ import annotations

import math

from ..core.holes import extract_holes
from ..core.paths import PathCollection

_SCALE = 18
_MARGIN = 30


def render_svg(w: PathCollection, holes_k: int = 0) -> str:
    """Up-right polylines on the lattice; optional circles at the holes of
    the first holes_k columns.  Same input, same bytes."""
    N = w.N
    width = w.max_col + 2

    def X(x):
        return _MARGIN + _SCALE * (x + 1)

    def Y(y):
        return _MARGIN + _SCALE * (N + 1 - y)

    segs = []
    for y in range(1, N + 1):
        below = w.rows[y - 2].parts if y >= 2 else ()
        above = w.rows[y - 1].parts
        segs.append((X(-1), Y(y), X(0), Y(y)))  # entry stub
        h = 1
        for x in range(0, width):
            i1 = below.count(x)
            i2 = above.count(x)
            j2 = i1 + h - i2
            if j2 == 1:
                segs.append((X(x), Y(y), X(x + 1), Y(y)))
            if i2 == 1:
                segs.append((X(x), Y(y), X(x), Y(y + 1)))
            h = j2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{2 * _MARGIN + _SCALE * (width + 2)}" '
        f'height="{2 * _MARGIN + _SCALE * (N + 1)}">',
        '<g stroke="#1f3b73" stroke-width="2" fill="none">',
    ]
    for x1, y1, x2, y2 in segs:
        parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    parts.append("</g>")
    if holes_k:
        arr = extract_holes(w, holes_k)
        parts.append('<g fill="none" stroke="#c03030" stroke-width="1.5">')
        for j in range(1, holes_k + 1):
            for i in range(1, j + 1):
                y = arr.entry(i, j)
                if math.isfinite(y):
                    cx = X(j) + _SCALE // 2  # midpoint of the empty edge
                    parts.append(f'<circle cx="{cx}" cy="{Y(int(y))}" r="5"/>')
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

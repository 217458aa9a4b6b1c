"""Vectorized height-function grids for statistics."""
from __future__ import annotations

import numpy as np

from .paths import PathCollection


def height_grid(w: PathCollection) -> np.ndarray:
    """h(x, y) over the bounding box: entry [y-1, x] counts paths crossing
    the line through y at column >= x."""
    width = w.max_col + 2
    out = np.zeros((w.N, width), dtype=np.int64)
    for y in range(1, w.N + 1):
        parts = np.asarray(w.row(y).parts)
        for x in range(width):
            out[y - 1, x] = int(np.sum(parts >= x))
    return out

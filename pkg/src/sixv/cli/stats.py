"""Statistics over raw sample files: edge fluctuations, height variance,
hole arrays."""
from __future__ import annotations

import math

import numpy as np
from scipy.stats import norm

from ..asymp.constants import limit_constants
from ..core.height import height_grid
from ..core.holes import extract_holes
from .campaign import iter_records

CSV_VERSION = "# sixv-csv v1"


def edge_stats(raw_path: str, q: float, u: float, v: float, M: int) -> tuple:
    """Per-sample normalized edge positions (Y^1_1 - aM)/(c sqrt(M)), their
    empirical CDF and the KS distance against the standard normal."""
    cst = limit_constants(q, u, v)
    scale = cst.c * math.sqrt(M)
    xs = []
    for head, w in iter_records(raw_path):
        y11 = extract_holes(w, 1).entry(1, 1)
        xs.append((y11 - cst.a * M) / scale)
    xs = np.sort(np.asarray(xs))
    n = len(xs)
    if n == 0:
        raise ValueError("empty raw file")
    cdf = norm.cdf(xs)
    ks = float(np.max(np.maximum(np.arange(1, n + 1) / n - cdf,
                                 cdf - np.arange(0, n) / n)))
    lines = [f"{CSV_VERSION} edge", "index,scaled_y11,empirical_cdf,normal_cdf"]
    for i, x in enumerate(xs):
        lines.append(f"{i},{x:.10g},{(i + 1) / n:.10g},{norm.cdf(x):.10g}")
    lines.append(f"# ks_distance={ks:.10g}")
    return "\n".join(lines) + "\n", ks


def height_variance_stats(raw_path: str) -> str:
    """Per-cell variance grid of the height function, N rows by max-column
    columns."""
    grids = []
    N = None
    for head, w in iter_records(raw_path):
        N = w.N
        grids.append(height_grid(w))
    if not grids:
        raise ValueError("empty raw file")
    width = max(g.shape[1] for g in grids)
    padded = np.zeros((len(grids), N, width))
    for i, g in enumerate(grids):
        padded[i, :, :g.shape[1]] = g
    var = padded.var(axis=0)
    lines = [f"{CSV_VERSION} height-variance",
             "y," + ",".join(f"x{x}" for x in range(width))]
    for y in range(1, N + 1):
        lines.append(f"{y}," + ",".join(f"{var[y - 1, x]:.10g}"
                                        for x in range(width)))
    return "\n".join(lines) + "\n"


def holes_stats(raw_path: str, k: int) -> str:
    """Hole arrays of the first k columns, one row per (sample, j, i)."""
    lines = [f"{CSV_VERSION} holes", "sample,j,i,y"]
    for idx, (head, w) in enumerate(iter_records(raw_path)):
        arr = extract_holes(w, k)
        if not arr.interlaces():
            raise AssertionError(f"hole interlacing violated in record {idx}")
        for j in range(1, k + 1):
            for i in range(1, j + 1):
                val = arr.entry(i, j)
                out = "inf" if math.isinf(val) else str(int(val))
                lines.append(f"{idx},{j},{i},{out}")
    return "\n".join(lines) + "\n"

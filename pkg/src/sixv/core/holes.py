"""Hole arrays: vertical positions of empty horizontal edges in the first
columns, the observable whose edge converges to the GUE-corners process."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .paths import PathCollection

INF = math.inf  # sentinel for "fewer holes than requested"


@dataclass(frozen=True)
class HoleArray:
    """Triangular array y[j-1][i-1] = Y_i^j for 1 <= i <= j <= k."""

    y: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.y)
        object.__setattr__(self, "y", rows)
        for j, r in enumerate(rows, start=1):
            if len(r) != j:
                raise ValueError(f"level {j} has {len(r)} entries")

    @property
    def k(self) -> int:
        return len(self.y)

    def entry(self, i: int, j: int):
        return self.y[j - 1][i - 1]

    def interlaces(self) -> bool:
        """Y^{j+1}_1 <= Y^j_1 <= Y^{j+1}_2 <= ... among finite entries."""
        for j in range(1, self.k):
            lo, hi = self.y[j - 1], self.y[j]
            for i in range(j):
                if math.isfinite(hi[i]) and math.isfinite(lo[i]) and hi[i] > lo[i]:
                    return False
                if math.isfinite(lo[i]) and math.isfinite(hi[i + 1]) and lo[i] > hi[i + 1]:
                    return False
        return True

    @property
    def is_finite(self) -> bool:
        return all(math.isfinite(v) for r in self.y for v in r)


def extract_holes(w: PathCollection, k: int) -> HoleArray:
    """Y^j_i = i-th smallest row y such that vertex (j, y) has no outgoing
    horizontal arrow; inf when column j has fewer than i such vertices."""
    if not (1 <= k <= w.N):
        raise ValueError(f"k = {k} outside 1..{w.N}")
    levels = []
    for j in range(1, k + 1):
        holes = []
        for y in range(1, w.N + 1):
            below = w.rows[y - 2].parts if y >= 2 else ()
            above = w.rows[y - 1].parts
            n_in = sum(1 for p in below if p <= j) + 1
            n_out = sum(1 for p in above if p <= j)
            if n_in - n_out == 0:  # edge (j, y) -> (j+1, y) empty
                holes.append(y)
        holes = holes[:j] + [INF] * max(0, j - len(holes))
        levels.append(tuple(holes[:j]))
    return HoleArray(tuple(levels))

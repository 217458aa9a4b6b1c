"""Path collections on the half-strip D_N and their two representations.

A PathCollection is N up-right paths entering from the left at rows 1..N and
exiting through the top; row k crosses the line y = k + 1/2 at the strictly
decreasing positive columns lambda^k.  The equivalent grid representation maps
(x, y) to the arrow configuration (i1, j1; i2, j2) at that vertex; vertices
right of the bounding box are implicitly empty.
"""
from __future__ import annotations

from dataclasses import dataclass

from .signatures import Signature, interlaces_below


@dataclass(frozen=True)
class ArrowConfig:
    i1: int  # arrows in from below
    j1: int  # in from the left
    i2: int  # out the top
    j2: int  # out the right

    def __post_init__(self):
        if self.j1 not in (0, 1) or self.j2 not in (0, 1):
            raise ValueError(f"horizontal multiplicity exceeds 1: {self}")
        if self.i1 < 0 or self.i2 < 0:
            raise ValueError(f"negative arrow count: {self}")
        if self.i1 + self.j1 != self.i2 + self.j2:
            raise ValueError(f"arrow conservation violated: {self}")

    def astuple(self):
        return (self.i1, self.j1, self.i2, self.j2)


EMPTY_VERTEX = ArrowConfig(0, 0, 0, 0)
PASS_LEFT = ArrowConfig(0, 1, 0, 1)


@dataclass(frozen=True)
class PathCollection:
    rows: tuple  # rows[k-1] = lambda^k, a Signature of length k

    def __post_init__(self):
        rows = tuple(r if isinstance(r, Signature) else Signature(tuple(r))
                     for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for k, r in enumerate(rows, start=1):
            if len(r) != k:
                raise ValueError(f"row {k} has length {len(r)}")
            r.require(nonneg=True, strict=True)
        for lo, hi in zip(rows, rows[1:]):
            if not interlaces_below(lo, hi):
                raise ValueError(f"rows do not interlace: {lo.parts} / {hi.parts}")

    @property
    def N(self) -> int:
        return len(self.rows)

    def row(self, k: int) -> Signature:
        return self.rows[k - 1]

    @property
    def max_col(self) -> int:
        return self.rows[-1][0] if self.rows else 0

    def to_grid(self) -> dict:
        """Vertex map over the bounding box [0, max_col] x [1, N]."""
        grid = {}
        for y in range(1, self.N + 1):
            below = self.rows[y - 2].parts if y >= 2 else ()
            above = self.rows[y - 1].parts
            h = 1  # every row receives one arrow from the left boundary
            for x in range(0, self.max_col + 1):
                i1 = below.count(x)
                i2 = above.count(x)
                j2 = i1 + h - i2
                grid[(x, y)] = ArrowConfig(i1, h, i2, j2)
                h = j2
        return grid

    @classmethod
    def from_grid(cls, grid: dict, N: int) -> "PathCollection":
        rows = []
        for y in range(1, N + 1):
            cols = sorted((x for (x, yy), cfg in grid.items()
                           if yy == y for _ in range(cfg.i2)), reverse=True)
            rows.append(Signature(tuple(cols)))
        return cls(tuple(rows))

    # -- line-oriented text format (header "N=<n>", one row per line) --

    def to_text(self) -> str:
        lines = [f"N={self.N}"]
        for r in self.rows:
            lines.append(" ".join(str(x) for x in r.parts))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PathCollection":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("N="):
            raise ValueError("missing 'N=<n>' header")
        n = int(lines[0][2:])
        if len(lines) != n + 1:
            raise ValueError(f"expected {n} row lines, got {len(lines) - 1}")
        rows = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
        return cls(tuple(Signature(r) for r in rows))


def height_function(w: PathCollection, x: int, y: int) -> int:
    """Number of paths crossing the horizontal line through y at column >= x."""
    if x < 0 or not (1 <= y <= w.N):
        raise ValueError(f"({x}, {y}) outside the domain")
    return sum(1 for part in w.row(y).parts if part >= x)

"""Independent path-enumeration oracles for F and G^c.

These sum vertex-weight products over explicit collections of up-right paths
inside a caller-supplied box, level by level, and are the arbiters for the
closed formulas in `functions`.  Kept deliberately separate from the
symmetrization code paths.
"""
from __future__ import annotations

import itertools

from .weights import vertex_weight, conj_vertex_weight


def _row_weight(top, bottom, u, s, q, conj, h_in):
    """Product of vertex weights along one row: verticals in at `bottom`,
    out at `top`, `h_in` horizontals entering at the left edge."""
    w = conj_vertex_weight if conj else vertex_weight
    hi = max(top + bottom, default=-1)
    out = 1.0
    h = h_in
    for col in range(hi + 1):
        i1 = bottom.count(col)
        i2 = top.count(col)
        j2 = i1 + h - i2
        if j2 not in (0, 1):
            return 0.0
        out *= w(i1, h, i2, j2, u, s, q)
        if out == 0.0:
            return 0.0
        h = j2
    return out if h == 0 else 0.0


def _signatures(length, box):
    for combo in itertools.combinations_with_replacement(range(box + 1), length):
        yield tuple(sorted(combo, reverse=True))


def brute_force_F(lam, mu, us, s, q, box=None) -> float:
    """Sum over all path collections from mu (plus len(us) left entries) to
    lam, each weighted by its vertex-weight product."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu) + len(us):
        return 0.0
    if box is None:
        box = max(lam, default=0)
    if max(lam, default=0) > box or max(mu, default=0) > box:
        raise ValueError("box too small to contain the fixed endpoints")
    if len(us) > 3:
        raise ValueError("enumeration oracle limited to 3 rows")
    total = {mu: 1.0}
    for idx, u in enumerate(us):
        nxt = {}
        for kappa, wgt in total.items():
            for top in _signatures(len(mu) + idx + 1, box):
                w = _row_weight(top, kappa, u, s, q, conj=False, h_in=1)
                if w != 0.0:
                    nxt[top] = nxt.get(top, 0.0) + wgt * w
        total = nxt
    return total.get(lam, 0.0)


def brute_force_G(lam, mu, us, s, q, box=None) -> float:
    """Same for the conjugated weights: paths from mu to lam, no horizontal
    boundary entries."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        return 0.0
    if box is None:
        box = max(lam, default=0)
    if max(lam, default=0) > box or max(mu, default=0) > box:
        raise ValueError("box too small to contain the fixed endpoints")
    if len(us) > 3:
        raise ValueError("enumeration oracle limited to 3 rows")
    total = {mu: 1.0}
    for u in us:
        nxt = {}
        for kappa, wgt in total.items():
            for top in _signatures(len(mu), box):
                w = _row_weight(top, kappa, u, s, q, conj=True, h_in=0)
                if w != 0.0:
                    nxt[top] = nxt.get(top, 0.0) + wgt * w
        total = nxt
    return total.get(lam, 0.0)

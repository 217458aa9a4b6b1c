"""Exact row-update distribution by direct skew-product enumeration.

Independent of the interval factorization used by the sampler: each placement
is weighted by skew_F_row(nu/mu; u) * skew_G_row(nu/lam; v) inside a box,
with a geometric tail bound for the unbounded top part.
"""
from __future__ import annotations

import itertools

from ..core.params import admissibility_ratio
from ..symm.functions import skew_F_row, skew_G_row


def exact_row_oracle(k: int, u: float, v: float, lam, mu, box: int,
                     q: float, tail_tol: float = 1e-9) -> dict:
    """Normalized table {nu: P(nu)} of the sequential-update law with
    nu_1 <= box; raises if the reported geometric tail exceeds tail_tol."""
    if k > 3:
        raise ValueError("oracle limited to k <= 3")
    s = 1.0 / q**0.5
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != k or len(mu) != k - 1:
        raise ValueError("need len(lam) = k, len(mu) = k - 1")
    r = abs((u - s) / (1.0 - s * u) * (v - s) / (1.0 - s * v))
    weights = {}
    shell = 0.0
    for nu in itertools.combinations(range(box + 1), k):
        nu = tuple(sorted(nu, reverse=True))
        w = skew_F_row(nu, mu, u, s, q) * skew_G_row(nu, lam, v, s, q)
        if w != 0.0:
            weights[nu] = w
            if nu[0] == box:
                shell += abs(w)
    total = sum(weights.values())
    if total == 0.0:
        raise ValueError("no admissible placement inside the box")
    tail = shell * r / (1.0 - r) / abs(total)
    if tail > tail_tol:
        raise ValueError(f"tail bound {tail:.3g} exceeds {tail_tol}; "
                         "increase the box")
    table = {nu: w / total for nu, w in weights.items()}
    for nu, prob in table.items():
        if prob < -1e-12 or prob > 1.0 + 1e-12:
            raise AssertionError(f"signed weights inconsistent at {nu}: {prob}")
    return table

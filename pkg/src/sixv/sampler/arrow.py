"""Single-interval machinery: the reweighted interval weight (three displayed
cases) and the per-position arrow law over [c, d].

The arrow law's cases are generated mechanically from the four boundary
booleans
    bLL: c = lam_l     bRL: d = lam_{l-1}
    bLM: c = mu_l      bRM: d = mu_{l-1},
which decide the vertex patterns available at the interval's endpoints; the
middle is a geometric run with ratio p.  There are 16 boolean cases each for
d = c + 1 and d >= c + 2 plus the pinched case c = d, 33 in total.
"""
from __future__ import annotations

import math

from .kernels import weight_vector
from .rng import RngStream


def _wvec(u, v, q):
    s = 1.0 / math.sqrt(q)
    return weight_vector(u, v, s, q)


def base_weight(u: float, v: float, c: int, d: int,
                wL1: float, wL2: float, wR1: float, wR2: float,
                q: float) -> float:
    """Reweighted single-interval weight in the staircase geometry
    (c = lam_l, d = mu_{l-1}); the three displayed cases by gap size, with
    each position's term multiplied by wL1 unless the arrow sits at c (then
    wL2) and by wR1 unless it sits at d (then wR2)."""
    if c > d:
        return 0.0
    W = _wvec(u, v, q)
    p = W[10]
    n = d - c
    if n == 0:
        return W[4] * W[7] * wL2 * wR2
    first = W[1] * W[3] * W[7] * wL2 * wR1
    last = W[0] * W[4] * W[8] * W[6] * p**(n - 1) * wL1 * wR2
    if n == 1:
        return first + last
    mid = W[1] * W[3] * W[0] * W[8] * W[6] * (1.0 - p**(n - 1)) / (1.0 - p)
    return first + last + mid * wL1 * wR1


def arrow_case_weights(u: float, v: float, c: int, d: int,
                       bLL: int, bRL: int, bLM: int, bRM: int,
                       q: float) -> list:
    """Unnormalized weight of each position x in [c, d], derived from the
    boolean-selected endpoint vertex patterns; common position-independent
    factors are dropped.  Returns [(x, weight)] in increasing x."""
    if c > d:
        raise ValueError("empty interval")
    W = _wvec(u, v, q)
    p = W[10]

    def col_c_at(bLM_, bLL_):
        f = W[2] if bLM_ else W[1]
        g = W[7] if bLL_ else W[6]
        return f * g

    def col_c_passed(bLM_, bLL_):
        f = W[3] if bLM_ else W[0]
        g = W[8] if bLL_ else W[5]
        return f * g

    def col_d_at(bRM_, bRL_, bLM_):
        # arriving traveler is present unless the interval is pinched with
        # the mu part exactly at the single column
        f = W[4] if bRM_ else W[1]
        g = W[9] if bRL_ else W[6]
        return f * g

    if c == d:
        f = W[2] if bLM else (W[4] if bRM else W[1])
        g = W[7] if bLL else (W[9] if bRL else W[6])
        return [(c, f * g)]
    out = [(c, col_c_at(bLM, bLL))]
    passed = col_c_passed(bLM, bLL)
    for x in range(c + 1, d):
        out.append((x, passed * p**(x - c - 1) * W[1] * W[6]))
    out.append((d, passed * p**(d - c - 1) * col_d_at(bRM, bRL, bLM)))
    return out


def arrow_sampler(u: float, v: float, c: int, d: int,
                  bLL: int, bRL: int, bLM: int, bRM: int,
                  wL1: float, wL2: float, wR1: float, wR2: float,
                  rng, q: float) -> int:
    """Draw nu_l in [c, d] from the conditional law built from the case
    weights and the wL/wR multiplication rule."""
    if c == d:
        return c
    cases = arrow_case_weights(u, v, c, d, bLL, bRL, bLM, bRM, q)
    masses = []
    for x, w in cases:
        w *= wL2 if x == c else wL1
        w *= wR2 if x == d else wR1
        masses.append(w)
    total = sum(masses)
    if total == 0.0:
        raise ArithmeticError("all case weights are zero: inconsistent bounds")
    if isinstance(rng, RngStream):
        rng = rng.generator()
    r = rng.random()
    acc = 0.0
    for (x, _), m in zip(cases, masses):
        frac = m / total
        if frac < -1e-12 or frac > 1.0 + 1e-12:
            raise AssertionError(f"case probability {frac} outside [0,1]")
        acc += frac
        if r < acc:
            return x
    return cases[-1][0]

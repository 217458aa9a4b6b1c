"""Numeric evaluation of the symmetric rational functions F and G^c.

F_lambda / G^c_nu are partition functions of up-right path ensembles with the
ordinary / conjugated vertex weights.  This module provides the symmetrized
sums over S_N, the single-row skew weights, and the closed forms at geometric
variable strings.
"""
from __future__ import annotations

import itertools
import math

from .weights import (q_pochhammer, q_pochhammer_inv, vertex_weight,
                      conj_vertex_weight)

SYM_MAX_VARS = 8  # factorial growth; symmetrized sums refuse beyond this
COINCIDENCE_TOL = 1e-9


class CoincidentVariablesError(ValueError):
    pass


def _check_distinct(us):
    us = tuple(float(u) for u in us)
    if len(us) > SYM_MAX_VARS:
        raise ValueError(f"symmetrized sum limited to {SYM_MAX_VARS} variables")
    for a, b in itertools.combinations(us, 2):
        if abs(a - b) <= COINCIDENCE_TOL * max(1.0, abs(a), abs(b)):
            raise CoincidentVariablesError(
                f"variables {a} and {b} nearly coincide; use the geometric "
                "specializations (F_geom/G_geom) or perturb the grid")
    return us


def _cross_ratio(u, q):
    out = 1.0
    for a in range(len(u)):
        for b in range(a + 1, len(u)):
            out *= (u[a] - q * u[b]) / (u[a] - u[b])
    return out


def F_sym(lam, us, s: float, q: float) -> float:
    """F_lambda(u_1..u_N) by the symmetrization formula over S_N."""
    lam = tuple(lam)
    us = _check_distinct(us)
    N = len(us)
    if len(lam) != N:
        raise ValueError(f"need len(lam) == len(us), got {len(lam)} != {N}")
    pref = (1.0 - q)**N
    for u in us:
        pref /= 1.0 - s * u
    total = 0.0
    for perm in itertools.permutations(us):
        term = _cross_ratio(perm, q)
        for i, u in enumerate(perm):
            term *= ((u - s) / (1.0 - s * u))**lam[i]
        total += term
    return pref * total


def G_sym(nu, us, s: float, q: float) -> float:
    """G^c_nu(u_1..u_N) by the symmetrization formula; 0 when N < n - n0.

    The trailing product runs over the last N - (n - n0) permuted variables,
    pinned against the path-enumeration oracle (the printed index range of
    the source formula is garbled).
    """
    nu = tuple(nu)
    us = _check_distinct(us)
    n = len(nu)
    n0 = sum(1 for x in nu if x == 0)
    N = len(us)
    if N < n - n0:
        return 0.0
    pref = (1.0 - q)**N * q_pochhammer(q, q, n)
    for u in us:
        pref /= 1.0 - s * u
    pref /= q_pochhammer(q, q, N - n + n0) * q_pochhammer(q, q, n0)
    for val, mult in _positive_multiplicities(nu).items():
        pref *= q_pochhammer(s * s, q, mult) / q_pochhammer(q, q, mult)
    nu_ext = nu + (0,) * (N - n)
    total = 0.0
    for perm in itertools.permutations(us):
        term = _cross_ratio(perm, q)
        for i, u in enumerate(perm):
            term *= ((u - s) / (1.0 - s * u))**nu_ext[i]
        for u in perm[: n - n0]:
            term *= u / (u - s)
        for u in perm[n - n0:]:
            term *= 1.0 - s * q**n0 * u
        total += term
    return pref * total


def _positive_multiplicities(nu):
    out = {}
    for x in nu:
        if x > 0:
            out[x] = out.get(x, 0) + 1
    return out


def skew_F_row(lam, mu, u: float, s: float, q: float) -> float:
    """Weight of the unique one-row path configuration from mu to lam with
    one horizontal entering from the left; 0 when no configuration exists."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu) + 1:
        return 0.0
    return _row_product(lam, mu, u, s, q, vertex_weight, h_in=1)


def skew_G_row(lam, mu, u: float, s: float, q: float) -> float:
    """Conjugated one-row weight from mu up to lam (equal lengths)."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        return 0.0
    return _row_product(lam, mu, u, s, q, conj_vertex_weight, h_in=0)


def _row_product(lam, mu, u, s, q, w, h_in):
    if any(x < 0 for x in lam) or any(x < 0 for x in mu):
        return 0.0
    top = max(lam + mu, default=-1)
    out = 1.0
    h = h_in
    for col in range(top + 1):
        i1 = mu.count(col)
        i2 = lam.count(col)
        j2 = i1 + h - i2
        if j2 not in (0, 1):
            return 0.0
        out *= w(i1, h, i2, j2, u, s, q)
        h = j2
    return out if h == 0 else 0.0


def F_geom(mu, u: float, N: int, s: float, q: float) -> float:
    """F_mu at the geometric string (u, qu, ..., q^{N-1}u)."""
    mu = tuple(mu)
    if len(mu) != N:
        raise ValueError("mu must have one part per variable")
    out = q_pochhammer(q, q, N)
    for i in range(N):
        ui = q**i * u
        d = 1.0 - s * ui
        if d == 0.0:
            raise ZeroDivisionError(f"1 - s q^{i} u vanishes")
        out *= ((ui - s) / d)**mu[i] / d
    return out


def G_geom(nu, u: float, N: int, s: float, q: float) -> float:
    """G^c_nu at the geometric string with N variables (general s)."""
    nu = tuple(nu)
    n = len(nu)
    n0 = sum(1 for x in nu if x == 0)
    if N < n - n0:
        return 0.0
    out = 1.0
    for val, mult in _positive_multiplicities(nu).items():
        out *= q_pochhammer(s * s, q, mult) / q_pochhammer(q, q, mult)
    out *= q_pochhammer(q, q, N) * q_pochhammer(s * u, q, N + n0)
    out *= q_pochhammer(q, q, n)
    out /= (q_pochhammer(q, q, N - n + n0) * q_pochhammer(s * u, q, n)
            * q_pochhammer(q, q, n0))
    out /= q_pochhammer_inv(s / u, 1.0 / q, n - n0)
    nu_ext = nu + (0,) * max(0, N - n)
    for i in range(N):
        ui = q**i * u
        d = 1.0 - s * ui
        if d == 0.0:
            raise ZeroDivisionError(f"1 - s q^{i} u vanishes")
        out *= ((ui - s) / d)**nu_ext[i] / d
    return out


def g_principal(nu, v: float, J: int, s: float, q: float) -> float:
    """Principal specialization G^c_nu(v, qv, ..., q^{J-1}v) at s^2 = 1/q;
    vanishes unless the positive parts of nu are distinct."""
    if abs(s * s * q - 1.0) > 1e-12:
        raise ValueError("principal specialization requires s = q^(-1/2)")
    nu = tuple(nu)
    N = len(nu)
    if J < N:
        raise ValueError(f"need J >= len(nu), got {J} < {N}")
    n0 = sum(1 for x in nu if x == 0)
    if any(m > 1 for m in _positive_multiplicities(nu).values()):
        return 0.0
    out = q_pochhammer(q, q, N) * (-q)**(n0 - N) / q_pochhammer(q, q, n0)
    out *= q_pochhammer(s * v, q, N - n0) / q_pochhammer(s * v, q, N)
    out /= q_pochhammer_inv(s / v, 1.0 / q, N - n0)
    out *= q_pochhammer(q**(J - N + n0 + 1), q, N - n0)
    out *= q_pochhammer(s * v * q**J, q, n0)
    for j in range(N - n0):
        vj = q**j * v
        d = 1.0 - s * vj
        out *= ((vj - s) / d)**nu[j] / d
    return out


def skew_G_multi(lam, mu, vs, s: float, q: float) -> float:
    """G^c_{lam/mu}(v_1..v_M) by exact branching over intermediate rows;
    finite because intermediates are trapped between mu and lam."""
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        return 0.0
    if not vs:
        return 1.0 if lam == mu else 0.0
    total = {mu: 1.0}
    for v in vs:
        nxt = {}
        for kappa, wgt in total.items():
            for new in _between_rows_G(kappa, lam):
                w = skew_G_row(new, kappa, v, s, q)
                if w != 0.0:
                    nxt[new] = nxt.get(new, 0.0) + wgt * w
        total = nxt
    return total.get(lam, 0.0)


def _between_rows_G(lo, hi):
    """Rows kappa with lo <= kappa <= hi componentwise and the one-row
    interlacing lo_{i-1} >= kappa_i (so that both skew rows can be nonzero)."""
    n = len(lo)
    def build(i, acc):
        if i == n:
            yield tuple(acc)
            return
        upper = hi[i] if i == 0 else min(hi[i], lo[i - 1])
        for x in range(lo[i], upper + 1):
            if acc and x > acc[-1]:
                continue
            yield from build(i + 1, acc + [x])
    yield from build(0, [])


def skew_F_multi(lam, mu, us, s: float, q: float) -> float:
    """F_{lam/mu}(u_1..u_n) by exact branching (n = len(lam) - len(mu))."""
    lam, mu = tuple(lam), tuple(mu)
    n = len(lam) - len(mu)
    if n != len(us):
        return 0.0
    if n == 0:
        return 1.0 if lam == mu else 0.0
    total = {mu: 1.0}
    for idx, u in enumerate(us):
        nxt = {}
        target_len = len(mu) + idx + 1
        for kappa, wgt in total.items():
            for new in _extend_rows_F(kappa, lam, target_len):
                w = skew_F_row(new, kappa, u, s, q)
                if w != 0.0:
                    nxt[new] = nxt.get(new, 0.0) + wgt * w
        total = nxt
    return total.get(lam, 0.0)


def _extend_rows_F(kappa, lam, target_len):
    """Candidate next rows of length target_len dominated by lam's box."""
    cap = lam[0] if lam else 0
    def build(i, acc):
        if i == target_len:
            yield tuple(acc)
            return
        hi = cap if not acc else acc[-1]
        lo = kappa[i] if i < len(kappa) else 0
        for x in range(lo, hi + 1):
            yield from build(i + 1, acc + [x])
    yield from build(0, [])

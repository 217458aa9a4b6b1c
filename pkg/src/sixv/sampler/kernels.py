"""Compiled kernels for the exact sampler.

The row update draws nu from P(nu) proportional to F_{nu/mu}(u) G^c_{nu/lam}(v)
using an interval factorization: nu_i ranges over [a_i, b_i] with
a_i = max(mu_i, lam_i, 0), b_i = min(mu_{i-1}, lam_{i-1}), and the weight of a
placement splits into per-interval factors g_i(nu_i, touch) where touch
records whether nu_{i+1} sits at the shared boundary point min(mu_i, lam_i).
A two-state sweep over intervals (bottom-up aggregation, top-down sampling)
then samples the law exactly; interior runs of an interval are geometric with
ratio p = w_u(0,1;0,1) w^c_v(0,1;0,1), so unbounded ranges are handled in
closed form.

Weight vector layout (per (u, v) pair):
  0 f_pass_h  1 f_up  2 f_pass_v  3 f_turn_r  4 f_cross
  5 g_pass_h  6 g_up  7 g_pass_v  8 g_turn_r  9 g_cross  10 p
"""
from __future__ import annotations

import math

import numpy as np
from numba import njit

NEG = np.int64(-(10**15))
POS = np.int64(10**15)
PROB_SLACK = 1e-9


def weight_vector(u: float, v: float, s: float, q: float) -> np.ndarray:
    du = 1.0 - s * u
    dv = 1.0 - s * v
    w = np.empty(11)
    w[0] = (u - s) / du
    w[1] = (1.0 - q) / du
    w[2] = (1.0 - s * q * u) / du
    w[3] = (1.0 - s * s) * u / du
    w[4] = (u - s * q) / du
    w[5] = (v - s) / dv
    w[6] = (1.0 - s * s) / dv
    w[7] = (1.0 - s * q * v) / dv
    w[8] = (1.0 - q) * v / dv
    w[9] = (v - s * q) / dv
    w[10] = w[0] * w[5]
    return w


@njit(cache=True, fastmath=True)
def g_factor(x, mlow, llow, mup, lup, touch, W):
    """Weight of the columns owned by one interval when its part sits at x.

    mlow/llow are the lower boundary parts (mu_i, lam_i; NEG when absent),
    mup/lup the upper ones (mu_{i-1}, lam_{i-1}; POS when absent); touch
    means the part below sits at min(mlow, llow), claiming that column.
    """
    out = 1.0
    t = mlow if mlow < llow else llow
    mx = mlow if mlow > llow else llow
    if t > NEG and not touch and t < x:
        if mlow == llow:
            out *= W[3] * W[8]
        elif t == mlow:
            out *= W[3]
        else:
            out *= W[8]
    if mx > t and mx < x:
        if mx == mlow:
            out *= W[3]
            if llow < mx:
                out *= W[5]
        else:
            out *= W[8]
            if mlow < mx:
                out *= W[0]
    if mx > t:
        hi = mx if mx < x else x
        n1 = (hi - t - 1) if t > NEG else hi
        if n1 > 0:
            out *= (W[0] if mlow < llow else W[5]) ** n1
    if x > mx:
        out *= W[10] ** (x - mx - 1)
    # position column
    i1f = (x == mlow) or (x == mup)
    if i1f and mlow < x:
        out *= W[4]
    elif i1f:
        out *= W[2]
    else:
        out *= W[1]
    i1g = (x == llow) or (x == lup)
    if i1g and llow < x:
        out *= W[9]
    elif i1g:
        out *= W[7]
    else:
        out *= W[6]
    return out


@njit(cache=True, fastmath=True)
def _interval_refs(i, k, lam, mu):
    """(mlow, llow, mup, lup, a_i, b_i, t_i) for 1-indexed interval i."""
    mlow = mu[i - 1] if i <= k - 1 else NEG
    llow = lam[i - 1]
    mup = mu[i - 2] if i >= 2 else POS
    lup = lam[i - 2] if i >= 2 else POS
    a = mlow if mlow > llow else llow
    if a < 0:
        a = 0
    b = mup if mup < lup else lup
    t = mlow if mlow < llow else llow
    return mlow, llow, mup, lup, a, b, t


@njit(cache=True, fastmath=True)
def _delta(mlow, llow, W):
    """g(x, untouched) / g(x, touched) for x above the shared point: the
    factors of the column min(mlow, llow) when the part below stays clear."""
    if mlow == llow:
        return W[3] * W[8]
    if mlow < llow:
        return W[3]
    return W[8]


@njit(cache=True, fastmath=True)
def _g_parts(i, k, lam, mu, W):
    """Fused per-interval factors at fresh bounds: returns
    (a, b, t, g(a), g(a+1), g(b), delta) in the touched convention.
    Relies on a = max(mu_i, lam_i) (the zero floor never binds for
    nonnegative lam)."""
    mlow, llow, mup, lup, a, b, t = _interval_refs(i, k, lam, mu)
    # columns strictly below a, excluding the shared point t
    common = 1.0
    if a > t:
        n1 = (a - t - 1) if t > NEG else a
        if n1 > 0:
            common = (W[0] if mlow < llow else W[5]) ** n1
    # column a as the position
    i1f = (a == mlow) or (a == mup)
    if i1f and mlow < a:
        col_at = W[4]
    elif i1f:
        col_at = W[2]
    else:
        col_at = W[1]
    if (a == llow) or (a == lup):
        col_at *= W[9] if llow < a else W[7]
    else:
        col_at *= W[6]
    g_a = common * col_at
    # column a passed through (positions above a)
    if a == t:
        passed = 1.0
    else:
        passed = (W[3] if a == mlow else W[0]) * (W[8] if a == llow else W[5])
    g_a1 = common * passed * W[1] * W[6]
    g_b = 0.0
    if i >= 2 and b > a:
        col_b = (W[4] if b == mup else W[1]) * (W[9] if b == lup else W[6])
        g_b = common * passed * W[10] ** (b - a - 1) * col_b
    delta = _delta(mlow, llow, W) if i < k else 1.0
    return a, b, t, g_a, g_a1, g_b, delta


@njit(cache=True, fastmath=True)
def row_update(k, lam, mu, out, W, uni, ucur, wat_buf, wblw_buf, g_buf):
    """Draw nu (descending, strict) given lam (len k) and mu (len k-1);
    writes to out[:k] and returns the new uniform cursor, or -1 on an
    inconsistent weight state.

    g_buf is a (7, k+1) scratch holding per interval a, b, t (as floats)
    and the touched-state factors at a, a+1, b plus the delta ratio.
    """
    p = W[10]
    log_p = math.log(p)
    for i in range(1, k + 1):
        a_i, b_i, t_i, g_a, g_a1, g_b, delta = _g_parts(i, k, lam, mu, W)
        g_buf[0, i] = g_a
        g_buf[1, i] = g_a1
        g_buf[2, i] = g_b
        g_buf[3, i] = delta
        g_buf[4, i] = a_i
        g_buf[5, i] = b_i
        g_buf[6, i] = t_i
    # bottom-up aggregation: pair for the block of intervals i..k, keyed by
    # whether nu_i sits at b_i
    wat_buf[k] = 0.0
    wblw_buf[k] = 1.0
    for i in range(k, 1, -1):
        a = np.int64(g_buf[4, i])
        b = np.int64(g_buf[5, i])
        t = np.int64(g_buf[6, i])
        wat_lo = wat_buf[i]
        wblw_lo = wblw_buf[i]
        mix = wat_lo + g_buf[3, i] * wblw_lo   # for x strictly above t
        s_at = g_buf[2, i] * mix
        s_blw = 0.0
        if a < b:
            s_blw = g_buf[0, i] * (wblw_lo if a == t else mix)
            n_int = b - a - 1
            if n_int > 0:
                s_blw += g_buf[1, i] * mix * (1.0 - p**n_int) / (1.0 - p)
        else:
            s_at = g_buf[0, i] * (wblw_lo if a == t else mix)
        scale = abs(s_at)
        if abs(s_blw) > scale:
            scale = abs(s_blw)
        if scale == 0.0:
            return -1
        wat_buf[i - 1] = s_at / scale
        wblw_buf[i - 1] = s_blw / scale
    # top-down sampling
    beta_at = 0.0
    beta_blw = 1.0
    for i in range(1, k + 1):
        a = np.int64(g_buf[4, i])
        b = np.int64(g_buf[5, i])
        t = np.int64(g_buf[6, i])
        wat_lo = wat_buf[i]
        wblw_lo = wblw_buf[i]
        mix = wat_lo + g_buf[3, i] * wblw_lo
        c_a = g_buf[0, i] * (wblw_lo if a == t else mix)
        m_a = (beta_at if a == b else beta_blw) * c_a
        m_int = 0.0
        m_d = 0.0
        n_int = -1
        if i == 1:
            m_int = beta_blw * g_buf[1, i] * mix / (1.0 - p)
        else:
            n_int = b - a - 1
            if n_int > 0:
                m_int = (beta_blw * g_buf[1, i] * mix
                         * (1.0 - p**n_int) / (1.0 - p))
            if b > a:
                m_d = beta_at * g_buf[2, i] * mix
        total = m_a + m_int + m_d
        if total == 0.0:
            return -1
        pa = m_a / total
        pi = m_int / total
        pd = m_d / total
        if (pa < -PROB_SLACK or pi < -PROB_SLACK or pd < -PROB_SLACK
                or pa > 1.0 + PROB_SLACK or pi > 1.0 + PROB_SLACK
                or pd > 1.0 + PROB_SLACK):
            return -1
        r = uni[ucur]
        ucur += 1
        x = a
        g_at_x = g_buf[0, i]  # touched-state g value at the sampled x
        if r < pa:
            x = a
        elif r < pa + pi:
            r2 = uni[ucur]
            ucur += 1
            if n_int < 0:
                step = int(math.floor(math.log(1.0 - r2) / log_p))
            else:
                step = int(math.floor(
                    math.log(1.0 - r2 * (1.0 - p**n_int)) / log_p))
                if step > n_int - 1:
                    step = n_int - 1
            if step < 0:
                step = 0
            x = a + 1 + step
            g_at_x = g_buf[1, i] * p**step
        else:
            x = b
            g_at_x = g_buf[2, i]
        out[i - 1] = x
        beta_at = g_at_x if x > t else 0.0
        beta_blw = g_at_x * (g_buf[3, i] if x > t else 1.0)
        scale = abs(beta_at)
        if abs(beta_blw) > scale:
            scale = abs(beta_blw)
        if scale == 0.0:
            return -1
        beta_at /= scale
        beta_blw /= scale
    return ucur


@njit(cache=True, fastmath=True)
def sweep_update(N, lam_mat, out_mat, Wmat, uni, wat_buf, wblw_buf, g_buf):
    """One v-sweep: rows k = 1..N updated in place against the previous
    configuration; Wmat[k-1] is the weight vector for (u_k, v)."""
    ucur = 0
    for k in range(1, N + 1):
        ucur = row_update(k, lam_mat[k - 1, :k],
                          out_mat[k - 2, :k - 1] if k >= 2 else lam_mat[0, :0],
                          out_mat[k - 1, :k], Wmat[k - 1], uni, ucur,
                          wat_buf, wblw_buf, g_buf)
        if ucur < 0:
            return -1
    return ucur


@njit(cache=True, fastmath=True)
def zero_row(prev_up, b1, b2, uni, out):
    """One row of the base (M = 0) sampler.

    prev_up: ascending up-arrow columns of the row below; returns
    (count, draws) with count = len(prev_up) + 1 on success, draws = -1 when
    the uniform buffer ran out (caller retries with a longer buffer).
    """
    n_prev = prev_up.shape[0]
    ptr = 0
    h = 1
    x = 1
    nout = 0
    c = 0
    nuni = uni.shape[0]
    while True:
        if h == 0:
            if ptr >= n_prev:
                break
            x = prev_up[ptr]
        i1 = ptr < n_prev and prev_up[ptr] == x
        if i1:
            ptr += 1
        if i1 and h == 1:
            out[nout] = x          # (1,1;1,1): forced up + pass right
            nout += 1
        elif i1:
            if c >= nuni:
                return nout, -1
            if uni[c] < b1:        # (1,0;1,0)
                out[nout] = x
                nout += 1
                h = 0
            else:                  # (1,0;0,1)
                h = 1
            c += 1
        elif h == 1:
            if c >= nuni:
                return nout, -1
            if uni[c] < b2:
                h = 1              # (0,1;0,1)
            else:
                out[nout] = x      # (0,1;1,0)
                nout += 1
                h = 0
            c += 1
        x += 1
    return nout, c

"""Observable weights W^f(m; z) on truncated state spaces and the
first-order recurrence relating them across system sizes."""
from __future__ import annotations

import itertools

from ..symm.functions import skew_F_row


def _rows(length, box):
    for combo in itertools.combinations_with_replacement(range(box + 1), length):
        yield tuple(sorted(combo, reverse=True))


def _staircase_event(sig, r):
    """sig lies in Sign*_{m,r}: strict and ends with (r-1, ..., 1, 0)."""
    if len(set(sig)) < len(sig):
        return False
    m = len(sig)
    return tuple(sig[m - r:]) == tuple(range(r - 1, -1, -1))


def weight_observable(ms, zs, f_table, s, q):
    """W^f(m; z) = sum over path collections with lambda^{m_i} in
    Sign*_{m_i, i}, weighted by the row products and f(lambda^N).

    f_table maps top signatures (tuples) to reals; the state space is exact
    because supp(f) bounds every row.
    """
    ms = tuple(ms)
    zs = tuple(zs)
    N = len(zs)
    if any(len(sig) != N for sig in f_table):
        raise ValueError("f_table keys must have length N")
    box = max((x for sig in f_table for x in sig), default=0)
    level = {(): 1.0}
    for y in range(1, N + 1):
        nxt = {}
        for prev, wgt in level.items():
            for row in _rows(y, box):
                w = skew_F_row(row, prev, zs[y - 1], s, q)
                if w == 0.0:
                    continue
                if y in ms:
                    r = max(i + 1 for i, m in enumerate(ms) if m == y)
                    if not _staircase_event(row, r):
                        continue
                nxt[row] = nxt.get(row, 0.0) + wgt * w
        level = nxt
    return sum(wgt * f_table.get(top, 0.0) for top, wgt in level.items())


def recurrence_check(ms, zs, f_table, s, q):
    """Evaluate both sides of the first-order recurrence
    W^f(m; z) = prod_{j>m_1} (z_j - sq)/(1 - s z_j)
                * sum_i (1-q)/(1-s z_i)
                  prod_{j<=m_1, j!=i} (z_j - q z_i)/(z_j - z_i)
                                       (z_j - s)/(1 - s z_j)
                  * W^g(m-hat; z \\ {z_i}),
    with g(mu) = f(mu + 1^{N-1}); returns (lhs, rhs, |lhs - rhs|)."""
    ms = tuple(ms)
    zs = tuple(zs)
    N = len(zs)
    if not ms:
        raise ValueError("recurrence needs at least one level")
    m1 = ms[0]
    lhs = weight_observable(ms, zs, f_table, s, q)

    g_table = {}
    for lam, val in f_table.items():
        if lam[-1] == 0 and val != 0.0:
            mu = tuple(x - 1 for x in lam[:-1])
            if all(x >= 0 for x in mu):
                g_table[mu] = g_table.get(mu, 0.0) + val
    ms_hat = tuple(m - 1 for m in ms[1:])

    outer = 1.0
    for z in zs[m1:]:
        outer *= (z - s * q) / (1.0 - s * z)
    rhs = 0.0
    for i in range(m1):
        zi = zs[i]
        coeff = (1.0 - q) / (1.0 - s * zi)
        for j in range(m1):
            if j == i:
                continue
            coeff *= (zs[j] - q * zi) / (zs[j] - zi)
            coeff *= (zs[j] - s) / (1.0 - s * zs[j])
        rest = zs[:i] + zs[i + 1:]
        rhs += coeff * weight_observable(ms_hat, rest, g_table, s, q)
    rhs *= outer
    return lhs, rhs, abs(lhs - rhs)

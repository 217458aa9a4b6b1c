"""Midpoint-split row sampling: interval weights, the single-interval
reweighted sum, the per-position arrow law, and a recursive row sampler.

This mirrors the divide-and-conquer description of the sampling algorithm:
sample the middle part conditioned on the aggregate weights of the index
blocks on either side, then recurse with boundary-collision adjustments
(bump c_{s-1} by +1 / d_{s+1} by -1 when the sampled part lands on a shared
bound).  The compiled linear sweep in `kernels` is the production path; this
module is the operation-level surface and is cross-checked against both the
kernel and direct enumeration.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernels import weight_vector, g_factor, NEG, POS
from .rng import RngStream

_INF = int(POS)
_NEG = int(NEG)


@dataclass(frozen=True)
class IntervalBounds:
    """Per-part admissible ranges a_i = max(mu_i, lam_i, 0),
    b_i = min(mu_{i-1}, lam_{i-1}) with mu_k = -inf, lam_0 = mu_0 = +inf."""

    a: tuple
    b: tuple

    @classmethod
    def fresh(cls, lam, mu):
        lam, mu = tuple(lam), tuple(mu)
        k = len(lam)
        a, b = [], []
        for i in range(1, k + 1):
            mi = mu[i - 1] if i <= k - 1 else _NEG
            a.append(max(mi, lam[i - 1], 0))
            b.append(min(mu[i - 2] if i >= 2 else _INF,
                         lam[i - 2] if i >= 2 else _INF))
        return cls(tuple(a), tuple(b))

    @property
    def k(self):
        return len(self.a)


class _RowProblem:
    """Bound bookkeeping shared by Weight and the recursive sampler."""

    def __init__(self, lam, mu, u, v, q):
        self.lam = tuple(lam)
        self.mu = tuple(mu)
        self.k = len(self.lam)
        s = 1.0 / math.sqrt(q)
        self.W = weight_vector(u, v, s, q)
        self.p = self.W[10]

    def refs(self, i):
        """(mlow, llow, mup, lup, t) for interval i (1-indexed)."""
        mlow = self.mu[i - 1] if i <= self.k - 1 else _NEG
        llow = self.lam[i - 1]
        mup = self.mu[i - 2] if i >= 2 else _INF
        lup = self.lam[i - 2] if i >= 2 else _INF
        return mlow, llow, mup, lup, min(mlow, llow)

    def g(self, i, x, touch):
        mlow, llow, mup, lup, _ = self.refs(i)
        return g_factor(x, mlow, llow, mup, lup, touch, self.W)

    def weight(self, c, d, lo, hi, ext_touch=False, top_pair=(1.0, 1.0)):
        """Sum over placements nu_i in [c_i, d_i] (i in lo..hi) of the
        interval factors, with `ext_touch` the state of the external part
        below index hi and `top_pair` = (weight when nu_lo = d_lo, weight
        otherwise) applied at the block's top index."""
        if lo > hi:
            return 1.0
        for i in range(lo, hi + 1):
            if c[i] > d[i]:
                return 0.0
        s_idx = (lo + hi) // 2
        total = 0.0
        for x, wgt in self._split_masses(c, d, lo, hi, s_idx, ext_touch,
                                         top_pair):
            total += wgt
        return total

    # -- internals --

    def _low_parts(self, c, d, lo, hi, s_idx, x, ext_touch):
        """Weight of the lower block (s_idx+1..hi) paired with interval
        s_idx's own factor at x."""
        _, _, _, _, t = self.refs(s_idx)
        if s_idx == hi:
            if ext_touch and x <= t:
                return 0.0
            return self.g(s_idx, x, ext_touch)
        dd = d[s_idx + 1]
        w_full = self.weight(c, d, s_idx + 1, hi, ext_touch)
        d2 = dict(d)
        d2[s_idx + 1] = dd - 1
        w_blw = self.weight(c, d2, s_idx + 1, hi, ext_touch)
        w_top = w_full - w_blw
        out = w_blw * self.g(s_idx, x, False)
        if x > dd:
            out += w_top * self.g(s_idx, x, dd == t)
        return out

    def _high(self, c, d, lo, s_idx, x, top_pair):
        if s_idx == lo:
            return top_pair[0] if x == d[lo] else top_pair[1]
        _, _, _, _, t_up = self.refs(s_idx - 1)
        if x == d[s_idx]:
            c2 = dict(c)
            if c2[s_idx - 1] == x:
                c2[s_idx - 1] = x + 1
            return self.weight(c2, d, lo, s_idx - 1,
                               ext_touch=(x == min(self.refs(s_idx)[2],
                                                   self.refs(s_idx)[3])),
                               top_pair=top_pair)
        return self.weight(c, d, lo, s_idx - 1, ext_touch=False,
                           top_pair=top_pair)

    def _split_masses(self, c, d, lo, hi, s_idx, ext_touch, top_pair):
        """Yield (x, mass) for the middle index; interior runs are collapsed
        into one geometric mass tagged with x = None via _interior."""
        a_s, b_s = c[s_idx], d[s_idx]
        xs = [a_s]
        if b_s > a_s and b_s < _INF:
            xs.append(b_s)
        for x in xs:
            mass = self._low_parts(c, d, lo, hi, s_idx, x, ext_touch)
            mass *= self._high(c, d, lo, s_idx, x, top_pair)
            yield x, mass
        if b_s >= _INF:
            n_int = -1  # unbounded above
        else:
            n_int = b_s - a_s - 1
            if n_int <= 0:
                return
        x1 = a_s + 1
        m1 = self._low_parts(c, d, lo, hi, s_idx, x1, ext_touch)
        m1 *= self._high(c, d, lo, s_idx, x1, top_pair)
        if m1 == 0.0:
            return
        p = self.p
        if n_int < 0:
            yield ("interior", x1, -1, m1), m1 / (1.0 - p)
        else:
            yield ("interior", x1, n_int, m1), m1 * (1.0 - p**n_int) / (1.0 - p)


def interval_weight(bounds: IntervalBounds, lo: int, hi: int, lam, mu,
                    u: float, v: float, q: float) -> float:
    """W(c, d; {lo..hi}): the aggregate signed weight of all admissible
    placements of parts lo..hi inside `bounds`, by midpoint splitting."""
    prob = _RowProblem(lam, mu, u, v, q)
    c = {i: bounds.a[i - 1] for i in range(1, bounds.k + 1)}
    d = {i: bounds.b[i - 1] for i in range(1, bounds.k + 1)}
    return prob.weight(c, d, lo, hi)


def row_sampler_midpoint(k: int, u: float, v: float, lam, mu, rng, q: float):
    """Reference midpoint-recursion sampler for the sequential-update law;
    equal in distribution to the compiled kernel."""
    prob = _RowProblem(lam, mu, u, v, q)
    bounds = IntervalBounds.fresh(lam, mu)
    c = {i: bounds.a[i - 1] for i in range(1, k + 1)}
    d = {i: bounds.b[i - 1] for i in range(1, k + 1)}
    out = {}
    if isinstance(rng, RngStream):
        rng = rng.generator(sweep=1, row=1)

    def sample_block(lo, hi, ext_touch, top_pair):
        if lo > hi:
            return
        s_idx = (lo + hi) // 2
        entries = list(prob._split_masses(c, d, lo, hi, s_idx, ext_touch,
                                          top_pair))
        total = sum(m for _, m in entries)
        if total == 0.0:
            raise ArithmeticError("zero total mass in midpoint sampler")
        r = rng.random()
        acc = 0.0
        choice = entries[-1][0]
        for tag, m in entries:
            frac = m / total
            if frac < -1e-9 or frac > 1.0 + 1e-9:
                raise AssertionError(f"mass fraction {frac} outside [0,1]")
            acc += frac
            if r < acc:
                choice = tag
                break
        if isinstance(choice, tuple) and choice[0] == "interior":
            _, x1, n_int, _ = choice
            r2 = rng.random()
            p = prob.p
            if n_int < 0:
                step = int(math.floor(math.log(1.0 - r2) / math.log(p)))
            else:
                step = int(math.floor(math.log(1.0 - r2 * (1.0 - p**n_int))
                                      / math.log(p)))
                step = min(step, n_int - 1)
            x = x1 + max(step, 0)
        else:
            x = choice
        out[s_idx] = x
        # left (higher-index, lower-value) block with collision adjustments
        if s_idx < hi:
            _, _, _, _, t = prob.refs(s_idx)
            if x == d[s_idx + 1]:
                d[s_idx + 1] -= 1
                sample_block(s_idx + 1, hi, ext_touch, (1.0, 1.0))
            else:
                pair = (prob.g(s_idx, x, d[s_idx + 1] == t)
                        if x > d[s_idx + 1] else 0.0,
                        prob.g(s_idx, x, False))
                sample_block(s_idx + 1, hi, ext_touch, pair)
        # right (lower-index, higher-value) block
        if s_idx > lo:
            refs = prob.refs(s_idx)
            touch_up = x == min(refs[2], refs[3])
            if x == c[s_idx - 1]:
                c[s_idx - 1] += 1
            sample_block(lo, s_idx - 1, touch_up, top_pair)

    sample_block(1, k, False, (1.0, 1.0))
    return tuple(out[i] for i in range(1, k + 1))

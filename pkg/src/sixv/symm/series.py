"""The half-strip measure: boundary function, partition function, marginal
probabilities, and the truncated Cauchy-identity sums."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..core.params import ModelParams, require_valid, admissibility_ratio
from .weights import q_pochhammer
from .functions import (skew_G_multi, skew_F_multi, F_sym, G_sym,
                        skew_F_row, skew_G_row)


@dataclass(frozen=True)
class TruncationPolicy:
    """Cap on signature parts for infinite sums plus the geometric decay
    ratio used in the reported tail bound C r^L / (1 - r)."""

    max_part: int
    tail_ratio: float

    def __post_init__(self):
        if not (0.0 <= self.tail_ratio < 1.0):
            raise ValueError(f"tail ratio {self.tail_ratio} outside [0,1)")

    def tail_bound(self, scale: float = 1.0) -> float:
        r = self.tail_ratio
        return abs(scale) * r**self.max_part / (1.0 - r)

    @classmethod
    def for_params(cls, p: ModelParams, target: float = 1e-8, floor: int = 8):
        s = p.s
        r = max((admissibility_ratio(u, v, s) for u in p.u for v in p.v),
                default=0.5)
        r = max(r, 1e-6)
        L = floor
        while r**L / (1.0 - r) > target and L < 100000:
            L *= 2
        return cls(max_part=L, tail_ratio=r)


def boundary_f(lam, p: ModelParams, trunc: TruncationPolicy | None = None) -> float:
    """f(lambda; v, rho) = (-1)^N (q;q)_N sum_nu [nu has distinct positive
    parts] prod (-s)^{nu_j} G^c_{lambda/nu}(v_1..v_M).  The nu-sum is finite;
    result is 0 unless lambda has distinct positive parts."""
    lam = tuple(lam)
    N = len(lam)
    q, s = p.q, p.s
    if N != p.N:
        raise ValueError(f"len(lam) = {N} but params have N = {p.N}")
    if any(x <= 0 for x in lam) or len(set(lam)) < N:
        return 0.0
    total = 0.0
    ranges = [range(1, x + 1) for x in lam]
    for nu in itertools.product(*ranges):
        if any(a <= b for a, b in zip(nu, nu[1:])):
            continue  # distinct decreasing positive parts only
        g = skew_G_multi(lam, nu, p.v, s, q)
        if g != 0.0:
            total += (-s)**sum(nu) * g
    return (-1.0)**N * q_pochhammer(q, q, N) * total


def partition_Z(p: ModelParams, upto: int | None = None) -> float:
    """Z^f(u) = (q;q)_N prod_i (1 - u_i/s)/(1 - s u_i) prod_j (1 - q u_i v_j)
    / (1 - u_i v_j); `upto` restricts to the first m_k rows (the normalizer
    of the level-m_k marginal)."""
    require_valid(p)
    q, s = p.q, p.s
    n = p.N if upto is None else upto
    out = q_pochhammer(q, q, n)
    for u in p.u[:n]:
        out *= (1.0 - u / s) / (1.0 - s * u)
        for v in p.v:
            out *= (1.0 - q * u * v) / (1.0 - u * v)
    return out


def measure_prob(levels, p: ModelParams) -> float:
    """P(lambda^{m_1} = mu^{m_1}, ..., lambda^{m_k} = mu^{m_k}) under the
    half-strip measure, via the skew-F product times the boundary function
    over the level-m_k partition function.

    `levels` is a list of (m_i, signature) with 1 <= m_1 < ... < m_k <= N.
    """
    require_valid(p)
    if not levels:
        raise ValueError("need at least one level")
    ms = [m for m, _ in levels]
    if any(a >= b for a, b in zip(ms, ms[1:])) or ms[0] < 1 or ms[-1] > p.N:
        raise ValueError(f"levels must be increasing within 1..{p.N}: {ms}")
    sigs = [tuple(sig) for _, sig in levels]
    for m, sig in zip(ms, sigs):
        if len(sig) != m:
            raise ValueError(f"level {m} signature has length {len(sig)}")
        if any(x <= 0 for x in sig) or len(set(sig)) < m:
            return 0.0
    q, s = p.q, p.s
    out = 1.0
    prev_m, prev_sig = 0, ()
    for m, sig in zip(ms, sigs):
        out *= skew_F_multi(sig, prev_sig, p.u[prev_m:m], s, q)
        if out == 0.0:
            return 0.0
        prev_m, prev_sig = m, sig
    pk = ModelParams(q=p.q, u=p.u[: ms[-1]], v=p.v)
    out *= boundary_f(sigs[-1], pk)
    return out / partition_Z(p, upto=ms[-1])


def cauchy_lhs(p: ModelParams, trunc: TruncationPolicy) -> tuple:
    """Truncated sum_(nu strict) F_nu(u) G^c_nu(v) over parts <= max_part,
    together with its geometric tail bound.  N = K = 1 or 2 supported."""
    require_valid(p)
    q, s = p.q, p.s
    N = p.N
    L = trunc.max_part
    total = 0.0
    last_shell = 0.0
    if N == 1:
        for j in range(L + 1):
            term = _F_exact((j,), p.u, s, q) * skew_G_multi((j,), (0,), p.v, s, q)
            total += term
            if j == L:
                last_shell = abs(term)
    else:
        # the G side uses the symmetrization formula here (oracle-checked
        # elsewhere); multi-row branching is too slow at this truncation.
        # Repeated positive parts vanish, but (0,...,0) and friends do not.
        for nu in itertools.combinations_with_replacement(range(L + 1), N):
            nu = tuple(sorted(nu, reverse=True))
            if any(a == b and a > 0 for a, b in zip(nu, nu[1:])):
                continue
            term = _F_exact(nu, p.u, s, q) * G_sym(nu, p.v, s, q)
            total += term
            if nu[0] == L:
                last_shell += abs(term)
    r = trunc.tail_ratio
    bound = 4.0 * last_shell * r / (1.0 - r)
    return total, bound


def cauchy_rhs(p: ModelParams) -> float:
    """(q;q)_N prod_i (1/(1 - s u_i)) prod_j (1 - q u_i v_j)/(1 - u_i v_j)."""
    q, s = p.q, p.s
    out = q_pochhammer(q, q, p.N)
    for u in p.u:
        out /= 1.0 - s * u
        for v in p.v:
            out *= (1.0 - q * u * v) / (1.0 - u * v)
    return out


def _F_exact(lam, us, s, q):
    if len(us) == 1:
        return skew_F_row(lam, (), us[0], s, q)
    return F_sym(lam, us, s, q)


def skew_cauchy_check(lam, nu, u: float, v: float, s: float, q: float,
                      max_part: int) -> tuple:
    """Both sides of the skew Cauchy identity for single u and v with
    len(lam) = len(nu) + 1; returns (lhs, rhs, tail_bound).

    lhs = sum_kappa G^c_{kappa/lam}(v) F_{kappa/nu}(u)     (truncated)
    rhs = (1-quv)/(1-uv) sum_mu F_{lam/mu}(u) G^c_{nu/mu}(v)   (finite)
    """
    lam, nu = tuple(lam), tuple(nu)
    if len(lam) != len(nu) + 1:
        raise ValueError("need len(lam) = len(nu) + 1 for single u, v")
    r = admissibility_ratio(u, v, s)
    lhs = 0.0
    last_shell = 0.0
    n = len(lam)
    for kappa in itertools.combinations_with_replacement(range(max_part + 1), n):
        kappa = tuple(sorted(kappa, reverse=True))
        term = skew_G_row(kappa, lam, v, s, q) * skew_F_row(kappa, nu, u, s, q)
        if term != 0.0:
            lhs += term
            if kappa[0] == max_part:
                last_shell += abs(term)
    rhs = (1.0 - q * u * v) / (1.0 - u * v)
    inner = 0.0
    mu_cap = max(lam + nu, default=0)
    for mu in itertools.combinations_with_replacement(range(mu_cap + 1), len(nu)):
        mu = tuple(sorted(mu, reverse=True))
        inner += skew_F_row(lam, mu, u, s, q) * skew_G_row(nu, mu, v, s, q)
    rhs *= inner
    bound = 4.0 * last_shell * r / (1.0 - r)
    return lhs, rhs, bound

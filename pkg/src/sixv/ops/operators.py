"""The difference operators D^k_m acting on functions of m spectral variables.

D^k_m substitutes s for the variables indexed by a k-subset I and weights the
subset by cross ratios and the staircase function F_k; it acts diagonally on
F_lambda with eigenvalue 1 exactly when the bottom of lambda is the staircase
(k-1, ..., 1, 0).
"""
from __future__ import annotations

import itertools

from ..symm.functions import F_sym


def fk_S(k: int, s: float, q: float) -> float:
    """F_k evaluated at all variables = s:
    s^{k(k-1)/2} ((1-q)/(1-s^2))^{k(k+1)/2}."""
    return s**(k * (k - 1) // 2) * ((1.0 - q) / (1.0 - s * s))**(k * (k + 1) // 2)


def fk_eval(k: int, us, s: float, q: float):
    """F_k(u_1..u_k) = F_lambda at the staircase lambda = (k-1,...,1,0)."""
    if len(us) != k:
        raise ValueError(f"need {k} variables, got {len(us)}")
    return F_sym(tuple(range(k - 1, -1, -1)), us, s, q)


def fsub(lam, us_kept, k: int, s: float, q: float) -> float:
    """Closed form of F_lambda(u_1..u_{m-k}, s, ..., s) for strict lambda;
    zero unless lambda ends with the staircase (k-1,...,0)."""
    lam = tuple(lam)
    m = len(lam)
    if len(us_kept) != m - k:
        raise ValueError("need m - k kept variables")
    if tuple(lam[m - k:]) != tuple(range(k - 1, -1, -1)):
        return 0.0
    if k == m:
        return fk_S(k, s, q)
    head = tuple(x - k for x in lam[: m - k])
    out = F_sym(head, us_kept, s, q)
    out *= (s * (1.0 - q) / (1.0 - s * s))**(k * (k - 1) // 2)
    out *= ((1.0 - q) / (1.0 - s * s))**k
    for u in us_kept:
        out *= ((u - q * s) / (1.0 - s * u))**k
    return out


def eigen_F(lam, s: float, q: float):
    """Evaluation handle for F_lambda usable under D^k_m: slots set exactly
    to s are routed to the substitution closed form, everything else to the
    symmetrized sum.  lam must be strict."""
    lam = tuple(lam)

    def fn(args):
        kept = tuple(a for a in args if a != s)
        k_sub = len(args) - len(kept)
        if k_sub == 0:
            return F_sym(lam, args, s, q)
        return fsub(lam, kept, k_sub, s, q)

    return fn


def _check_grid(us, s, q):
    for (i, a), (j, b) in itertools.combinations(enumerate(us), 2):
        if a == b:
            raise ZeroDivisionError(f"u_{i+1} = u_{j+1} = {a}: singular cross ratio")
    for i, a in enumerate(us):
        if a == s * q:  # pole of both the subset coefficients and F_k
            raise ZeroDivisionError(f"u_{i+1} = sq is singular")


def apply_D(k: int, m: int, fn, us, s: float, q: float):
    """(D^k_m fn)(u_1..u_m) by direct subset summation.

    fn takes a tuple of m variable values; D substitutes s at the k chosen
    slots.
    """
    us = tuple(float(u) for u in us)
    if len(us) != m or not (1 <= k <= m):
        raise ValueError(f"need 1 <= k <= m = len(us), got k={k}, m={m}")
    _check_grid(us, s, q)
    fks = fk_S(k, s, q)
    total = 0.0
    for I in itertools.combinations(range(m), k):
        Ic = [j for j in range(m) if j not in I]
        coeff = 1.0
        for i in I:
            for j in Ic:
                coeff *= (us[j] - q * us[i]) / (us[j] - us[i])
        for j in Ic:
            coeff *= ((us[j] - s) / (us[j] - s * q))**k
        coeff *= fk_eval(k, [us[i] for i in I], s, q) / fks
        sub = list(us)
        for i in I:
            sub[i] = s
        total += coeff * fn(tuple(sub))
    return total


def apply_D_chain(ms, fn, us, s: float, q: float):
    """(D^1_{m_1} D^2_{m_2} ... D^k_{m_k} fn)(u) by the collapsed nested-index
    sum; requires k <= m_1 <= ... <= m_k <= len(us)."""
    ms = tuple(ms)
    us = tuple(float(u) for u in us)
    k = len(ms)
    if k == 0:
        return fn(us)
    if any(a > b for a, b in zip(ms, ms[1:])) or k > ms[0] or ms[-1] > len(us):
        raise ValueError(f"need k <= m_1 <= ... <= m_k <= {len(us)}, got {ms}")
    _check_grid(us, s, q)
    fks = fk_S(k, s, q)
    total = 0.0

    def rec(r, chosen, coeff):
        nonlocal total
        if r == k:
            sub = list(us)
            for i in chosen:
                sub[i] = s
            total += coeff * fn(tuple(sub)) / fks
            return
        for i in range(ms[r]):
            if i in chosen:
                continue
            c = coeff
            for j in range(ms[r]):
                if j == i or j in chosen:
                    continue
                c *= (us[j] - q * us[i]) / (us[j] - us[i])
                c *= (us[j] - s) / (us[j] - s * q)
            c *= (1.0 - q) / (1.0 - s * us[i])
            c *= ((us[i] - s * q) / (1.0 - s * us[i]))**r
            rec(r + 1, chosen + (i,), c)

    rec(0, (), 1.0)
    return total

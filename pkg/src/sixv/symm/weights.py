"""Vertex weights of the two weight families and q-Pochhammer helpers.

Configurations are (i1, j1; i2, j2) = (in from below, in from left, out top,
out right) with j1, j2 in {0, 1} and i1 + j1 = i2 + j2; anything else has
weight zero.  General vertical multiplicity g is supported so that the
enumeration oracles stay honest away from s^2 = 1/q.
"""
from __future__ import annotations


def q_pochhammer(a: float, q: float, n: int) -> float:
    """(a; q)_n = (1-a)(1-aq)...(1-aq^{n-1})."""
    out = 1.0
    for i in range(n):
        out *= 1.0 - a * q**i
    return out


def q_pochhammer_inv(a: float, qinv: float, n: int) -> float:
    """(a; q^{-1})_n with explicit inverse ratio."""
    out = 1.0
    for i in range(n):
        out *= 1.0 - a * qinv**i
    return out


def vertex_weight(i1: int, j1: int, i2: int, j2: int, u: float,
                  s: float, q: float) -> float:
    """Weight w_u of an arrow configuration; 0 for unsupported patterns."""
    if j1 not in (0, 1) or j2 not in (0, 1) or i1 < 0 or i2 < 0:
        return 0.0
    if i1 + j1 != i2 + j2:
        return 0.0
    d = 1.0 - s * u
    if j1 == 0 and j2 == 0:      # (g,0; g,0)
        return (1.0 - s * q**i1 * u) / d
    if j1 == 0 and j2 == 1:      # (g+1,0; g,1)
        return (1.0 - s * s * q**i2) * u / d
    if j1 == 1 and j2 == 1:      # (g,1; g,1)
        return (u - s * q**i1) / d
    return (1.0 - q**(i1 + 1)) / d  # (g,1; g+1,0)


def conj_vertex_weight(i1: int, j1: int, i2: int, j2: int, u: float,
                       s: float, q: float) -> float:
    """Conjugated weight w^c_u; differs from w_u in the two turning
    patterns."""
    if j1 not in (0, 1) or j2 not in (0, 1) or i1 < 0 or i2 < 0:
        return 0.0
    if i1 + j1 != i2 + j2:
        return 0.0
    d = 1.0 - s * u
    if j1 == 0 and j2 == 0:
        return (1.0 - s * q**i1 * u) / d
    if j1 == 0 and j2 == 1:
        return (1.0 - q**(i2 + 1)) * u / d
    if j1 == 1 and j2 == 1:
        return (u - s * q**i1) / d
    return (1.0 - s * s * q**i1) / d

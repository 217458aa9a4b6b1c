"""Joint CDF of the right-edge holes (Y^1_1, ..., Y^k_k) by k-fold circle
quadrature of the correlation-kernel contour formula."""
from __future__ import annotations

import math

import numpy as np

from ..core.params import ModelParams, require_valid
from ..ops.contour import ContourSpec, default_contour, QUAD_RTOL, NODE_CAPS


def cdf_contour(ms, p: ModelParams, gamma: ContourSpec | None = None) -> float:
    """P(Y^1_1 <= m_1, ..., Y^k_k <= m_k) for the homogeneous measure.

    Integrand per variable z_r:
      ((q z - u)/(z - u) * (u - s)/(u - sq))^{m_r}
      * ((z - sq)/(z - s))^{k - r + 1}
      * ((1 - z v)/(1 - q z v) * (1 - q s v)/(1 - s v))^M / (z (1 - s z)),
    coupled by prod_{i<j} (z_i - z_j)/(z_i - q z_j) and a global q^{-k}.
    """
    require_valid(p)
    ms = tuple(int(m) for m in ms)
    k = len(ms)
    if k == 0:
        return 1.0
    if any(a > b for a, b in zip(ms, ms[1:])) or ms[0] < 1 or ms[-1] > p.N:
        raise ValueError(f"need 1 <= m_1 <= ... <= m_k <= N, got {ms}")
    if len(set(p.u)) != 1 or (p.M > 0 and len(set(p.v)) != 1):
        raise ValueError("contour CDF implemented for homogeneous parameters")
    q, s = p.q, p.s
    u = p.u[0]
    v = p.v[0] if p.M else 0.0
    if gamma is None:
        gamma = default_contour(u, s, q, v=v)
    gamma.check([u], s, q, exclude=([1.0 / (q * v)] if v else []))

    n = gamma.nodes
    prev = None
    while True:
        val = _cdf_quad(ms, q, s, u, v, p.M, gamma, n)
        if prev is not None and abs(val - prev) <= QUAD_RTOL * (1.0 + abs(val)):
            break
        if n >= NODE_CAPS.get(k, 2**10):
            break
        prev = val
        n *= 2
    if abs(val.imag) > 1e-9 * (1.0 + abs(val)):
        raise ArithmeticError(f"imaginary residue {val.imag}: contour misconfigured")
    return float(val.real)


def _cdf_quad(ms, q, s, u, v, M, spec, n):
    k = len(ms)
    z, ring = spec.points(n)
    h = spec.radius / n
    cols = []
    for r in range(1, k + 1):
        col = (((q * z - u) / (z - u)) * ((u - s) / (u - s * q)))**ms[r - 1]
        col = col * ((z - s * q) / (z - s))**(k - r + 1)
        if M:
            col = col * (((1.0 - z * v) / (1.0 - q * z * v))
                         * ((1.0 - q * s * v) / (1.0 - s * v)))**M
        col = col / (z * (1.0 - s * z))
        cols.append(col * ring * h)
    if k == 1:
        return np.sum(cols[0]) / q
    total = 0.0 + 0.0j
    for i0 in range(n):
        vals = [np.full((1,) * (k - 1), z[i0])]
        pieces = [np.full((1,) * (k - 1), cols[0][i0])]
        for d in range(1, k):
            shape = [1] * (k - 1)
            shape[d - 1] = n
            vals.append(z.reshape(shape))
            pieces.append(cols[d].reshape(shape))
        cross = np.ones((1,) * (k - 1), dtype=complex)
        for a in range(k):
            for b in range(a + 1, k):
                cross = cross * (vals[a] - vals[b]) / (vals[a] - q * vals[b])
        prod = cross
        for piece in pieces:
            prod = prod * piece
        total += np.sum(prod)
    return total / q**k

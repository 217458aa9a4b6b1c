"""Contour-integral action of D^k_m on product functions.

Both the single operator and composed chains act on F(z) = prod g(z_i) with
eigenvalue given by a k-fold integral over a circle around the spectral
parameters.  Quadrature is the n-node trapezoid rule on the circle, which
converges spectrally for these analytic integrands; nodes are doubled until
two successive values agree.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .operators import fk_S

QUAD_RTOL = 1e-11
NODE_CAPS = {1: 2**15, 2: 2**12, 3: 2**10}


@dataclass(frozen=True)
class ProductFunction:
    """F(z_1..z_m) = prod factor(z_i); factor must be holomorphic and
    non-vanishing on a neighborhood of [s, max u_i]."""

    factor: object
    arity: int

    def __call__(self, zs):
        out = 1.0
        for z in zs:
            out = out * self.factor(z)
        return out


@dataclass(frozen=True)
class ContourSpec:
    center: complex
    radius: float
    nodes: int = 256

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.nodes < 64 or self.nodes & (self.nodes - 1):
            raise ValueError("nodes must be a power of two >= 64")

    def points(self, n=None):
        n = n or self.nodes
        theta = 2.0 * np.pi * np.arange(n) / n
        ring = np.exp(1j * theta)
        return self.center + self.radius * ring, ring

    def check(self, us, s: float, q: float, exclude=()):
        """Raise unless the circle encloses every u, excludes s, 0 and the
        given extra points, and q*circle is disjoint from the circle."""
        c, r = self.center, self.radius
        for u in us:
            if abs(u - c) >= r:
                raise ValueError(f"contour does not enclose u = {u}")
        for label, pt in [("s", s), ("0", 0.0)] + [("excluded", p) for p in exclude]:
            if abs(pt - c) <= r:
                raise ValueError(f"contour contains excluded point {label} = {pt}")
        if abs(c) * (1.0 - q) <= r * (1.0 + q):
            raise ValueError("q * contour intersects the contour")
        return self


def default_contour(u: float, s: float, q: float, v: float = 0.0,
                    nodes: int = 256) -> ContourSpec:
    """Circle centered at u whose radius respects all exclusion constraints
    (s below, (qv)^{-1} above when M > 0, and q-dilation disjointness)."""
    r = min(0.2 * (u - s), 0.4 * u * (1.0 - q) / (1.0 + q))
    if v > 0.0:
        r = min(r, 0.2 * (1.0 / (q * v) - u))
    if r <= 0:
        raise ValueError("no admissible circle around u for these parameters")
    return ContourSpec(center=complex(u), radius=r, nodes=nodes)


def _staircase_F(z_cols, s, q):
    """Vectorized F_k at the staircase (k-1,...,0); z_cols is a list of k
    broadcastable complex arrays with pairwise distinct values."""
    k = len(z_cols)
    pref = (1.0 - q)**k
    for z in z_cols:
        pref = pref / (1.0 - s * z)
    total = 0.0
    for perm in itertools.permutations(range(k)):
        zp = [z_cols[i] for i in perm]
        term = 1.0
        for a in range(k):
            for b in range(a + 1, k):
                term = term * (zp[a] - q * zp[b]) / (zp[a] - zp[b])
        for i, z in enumerate(zp):
            term = term * ((z - s) / (1.0 - s * z))**(k - 1 - i)
        total = total + term
    return pref * total


def _det_times_staircase(z_cols, s, q):
    """q^{-k(k-1)/2} det[1/(q z_i - z_j)] * F_k(z) / F_k(S) in a pole-free
    form: the Vandermonde from the determinant cancels the symmetrization
    denominators, so coincident nodes contribute zero instead of 0/0."""
    k = len(z_cols)
    shape = np.broadcast_shapes(*(np.shape(z) for z in z_cols))
    vander = np.ones(shape, dtype=complex)
    for a in range(k):
        for b in range(a + 1, k):
            vander = vander * (z_cols[a] - z_cols[b])
    qden = np.ones(shape, dtype=complex)
    for a in range(k):
        for b in range(k):
            qden = qden * (q * z_cols[a] - z_cols[b])
    pref = (1.0 - q)**k
    for z in z_cols:
        pref = pref / (1.0 - s * z)
    sym = np.zeros(shape, dtype=complex)
    for perm in itertools.permutations(range(k)):
        sign = 1.0
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        zp = [z_cols[i] for i in perm]
        term = np.full(shape, sign, dtype=complex)
        for a in range(k):
            for b in range(a + 1, k):
                term = term * (zp[a] - q * zp[b])
        for i, z in enumerate(zp):
            term = term * ((z - s) / (1.0 - s * z))**(k - 1 - i)
        sym = sym + term
    out = (-1.0)**(k * (k - 1) // 2) * vander * pref * sym
    return out / (qden * fk_S(k, s, q))


def _quad_value_single(k, m, pf, us, spec, s, q, n):
    z, ring = spec.points(n)
    h = spec.radius / n  # (1/2pi i) dz  ->  (R/n) e^{i theta} per node
    fz = np.array([pf.factor(zz) for zz in z], dtype=complex)
    base = np.ones_like(z)
    for u in us:
        base = base * (q * z - u) / (z - u)
    base = base * ((z - s * q) / (z - s))**k * ring * h / fz
    if k == 1:
        fk = _staircase_F([z], s, q) / fk_S(1, s, q)
        return np.sum(base * fk / ((q - 1.0) * z))
    # the outer node index is looped, the inner k-1 are broadcast numpy axes
    total = 0.0 + 0.0j
    for i0 in range(n):
        sub = [np.full((1,) * (k - 1), z[i0])]
        pieces = [np.full((1,) * (k - 1), base[i0])]
        for d in range(1, k):
            shape = [1] * (k - 1)
            shape[d - 1] = n
            sub.append(z.reshape(shape))
            pieces.append(base.reshape(shape))
        prod = _det_times_staircase(sub, s, q)
        for piece in pieces:
            prod = prod * piece
        total += np.sum(prod)
    return total / math.factorial(k)


def contour_D(k: int, m: int, pf: ProductFunction, us, gamma: ContourSpec,
              s: float, q: float) -> float:
    """Single-operator eigenvalue relation: (D^k_m F)(u) / F(u), evaluated by
    k-fold circle quadrature of the stated integrand."""
    us = tuple(float(u) for u in us)
    if len(us) != m or pf.arity != m:
        raise ValueError("us and pf.arity must both have length m")
    gamma.check(us, s, q)
    pref = pf.factor(s)**k
    for u in us:
        pref *= ((u - s) / (u - s * q))**k
    n = gamma.nodes
    prev = None
    while True:
        val = _quad_value_single(k, m, pf, us, gamma, s, q, n)
        if prev is not None and abs(val - prev) <= QUAD_RTOL * (1.0 + abs(val)):
            break
        if n >= NODE_CAPS.get(k, 2**10):
            break
        prev = val
        n *= 2
    out = pref * val
    return _real(out)


def contour_D_chain(ms, pf: ProductFunction, us, gamma: ContourSpec,
                    s: float, q: float) -> float:
    """Chain eigenvalue (D^1_{m_1} ... D^k_{m_k} F)(u) / F(u) by k-fold
    quadrature of the composed-operator integrand."""
    ms = tuple(ms)
    k = len(ms)
    us = tuple(float(u) for u in us)
    if any(a > b for a, b in zip(ms, ms[1:])) or k > ms[0]:
        raise ValueError(f"need k <= m_1 <= ... <= m_k, got {ms}")
    gamma.check(us, s, q)
    pref = pf.factor(s)**k
    for mr in ms:
        for u in us[:mr]:
            pref *= (u - s) / (u - s * q)
    n = gamma.nodes
    prev = None
    while True:
        val = _chain_quad(ms, pf, us, gamma, s, q, n)
        if prev is not None and abs(val - prev) <= QUAD_RTOL * (1.0 + abs(val)):
            break
        if n >= NODE_CAPS.get(k, 2**10):
            break
        prev = val
        n *= 2
    return _real(pref * val)


def _chain_quad(ms, pf, us, spec, s, q, n):
    k = len(ms)
    z, ring = spec.points(n)
    h = spec.radius / n
    fz = np.array([pf.factor(zz) for zz in z], dtype=complex)
    per_r = []
    for r in range(1, k + 1):
        col = (1.0 - q) / (1.0 - s * z)
        col = col * ((z - s * q) / (1.0 - s * z))**(r - 1)
        rat = np.ones_like(z)
        for u in us[: ms[r - 1]]:
            rat = rat * (q * z - u) / (z - u)
        col = col * rat * ((z - s * q) / (z - s))**(k - r + 1)
        col = col / (fz * z * (q - 1.0))
        per_r.append(col * ring * h)
    fks = fk_S(k, s, q)
    if k == 1:
        return np.sum(per_r[0]) / fks
    total = 0.0 + 0.0j
    for i0 in range(n):
        vals = [np.full((1,) * (k - 1), z[i0])]
        pieces = [np.full((1,) * (k - 1), per_r[0][i0])]
        for d in range(1, k):
            shape = [1] * (k - 1)
            shape[d - 1] = n
            vals.append(z.reshape(shape))
            pieces.append(per_r[d].reshape(shape))
        cross = np.ones(vals[0].shape, dtype=complex)
        for a in range(k):
            for b in range(a + 1, k):
                cross = cross * (vals[a] - vals[b]) / (vals[a] - q * vals[b])
        prod = cross
        for piece in pieces:
            prod = prod * piece
        total += np.sum(prod)
    return total / fks


def _real(val, tol=1e-9):
    if abs(val.imag) > tol * (1.0 + abs(val)):
        raise ArithmeticError(f"imaginary residue {val.imag} above tolerance; "
                              "contour is likely misconfigured")
    return float(val.real)

"""Limit constants of the edge scaling and the steepest-descent diagnostics."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class LimitConstants:
    a: float    # edge speed: Y^i_i ~ a M
    a2: float   # half curvature of the phase function at s
    b1: float   # linear coefficient of the secondary phase
    c: float    # fluctuation scale: (2 a2)^{1/2} / b1

    def __post_init__(self):
        if not (self.a > 0 and self.a2 > 0 and self.b1 > 0):
            raise ValueError(f"limit constants must be positive: {self}")


def limit_constants(q: float, u: float, v: float) -> LimitConstants:
    """Closed-form constants of the Gaussian edge limit.

    Requires s > 1, s < u < (s + s^3)/2 and 0 < v < 1/u.  a is the edge
    speed (the phase function G is stationary at s exactly for this a), a2
    the quadratic Taylor coefficient of G at s (so G''(s) = 2 a2), and
    c = (2 a2)^{1/2} / b1 is the CLT scale of (Y^1_1 - aM)/sqrt(M); the
    Monte Carlo edge statistics pin this normalization.
    """
    s = 1.0 / math.sqrt(q)
    if not (s < u < (s + s**3) / 2.0):
        raise ValueError(f"u = {u} outside (s, (s+s^3)/2) = ({s}, {(s + s**3) / 2})")
    if not (0.0 < v < 1.0 / u):
        raise ValueError(f"v = {v} outside (0, 1/u)")
    w = 1.0 / v
    sq = s * q  # equals 1/s
    a = w * (u - sq) * (u - s) / (u * (w - sq) * (w - s))
    curvature = ((1.0 - q) * w / ((w - s) * (w - sq))
                 * (((q + 1.0) * u - 2.0 * sq) / ((u - s) * (u - sq))
                    - ((q + 1.0) * w - 2.0 * sq) / ((w - s) * (w - sq))))
    a2 = 0.5 * curvature
    b1 = 1.0 / (u - s) - 1.0 / (u / q - s)
    c = math.sqrt(2.0 * a2) / b1
    return LimitConstants(a=a, a2=a2, b1=b1, c=c)


def steepest_G(z: complex, q: float, u: float, v: float) -> tuple:
    """Diagnostic phase functions (G(z), g(z)) of the contour analysis;
    G(s) = G'(s) = 0 and G''(s) = 2 a2 ... a2, by construction of a."""
    s = 1.0 / math.sqrt(q)
    w = 1.0 / v
    cst = limit_constants(q, u, v)
    for pole in (u, u / q, w, w / q):
        if abs(z - pole) < 1e-12:
            raise ZeroDivisionError(f"z = {z} at a singular point")
    g = cmath.log((q * z - u) / (z - u) * (u - s) / (u - s * q))
    G = cst.a * g + cmath.log((w - z) / (w - q * z) * (w - s * q) / (w - s))
    return G, g

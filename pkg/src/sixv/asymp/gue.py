"""GUE-corners right edge: the Psi ladder, the determinant CDF, and a Monte
Carlo corners-process oracle."""
from __future__ import annotations

import math

import numpy as np
from scipy.stats import norm

PSI_RANGE = 6


def psi(m: int, y: float) -> float:
    """Psi^m(y) = (1/2 pi i) int_{1+iR} x^m e^{x^2/2 + yx} dx.

    For m >= 0 this is the m-th derivative of the Gaussian density (Hermite
    form); for m < 0 the |m|-th iterated integral, generated from (phi, Phi)
    by the three-term recurrence Psi^{m-1} = -(y Psi^m + Psi^{m+1}) / m*
    obtained by differentiating under the integral sign.
    """
    if abs(m) > PSI_RANGE:
        raise ValueError(f"m = {m} outside +-{PSI_RANGE}")
    phi = norm.pdf(y)
    if m >= 0:
        # d^m/dy^m phi(y) = (-1)^m He_m(y) phi(y), probabilists' Hermite
        he_prev, he = 1.0, y
        if m == 0:
            return phi
        for n in range(1, m):
            he_prev, he = he, y * he - n * he_prev
        return (-1.0)**m * he * phi
    vals = [phi, norm.cdf(y)]  # Psi^0, Psi^-1
    # downward: m Psi^{m-1} = -y Psi^m - Psi^{m+1} with m = -1, -2, ...
    for j in range(1, -m):
        nxt = (-y * vals[j] - vals[j - 1]) / (-j)
        vals.append(nxt)
    return vals[-m]


def psi_quadrature(m: int, y: float) -> float:
    """Independent slow route for m < 0: the |m|-th iterated integral of the
    Gaussian density, by adaptive quadrature."""
    from scipy.integrate import quad
    n = -m
    if n <= 0:
        raise ValueError("quadrature route is for negative m only")
    val, _ = quad(lambda x: (y - x)**(n - 1) / math.factorial(n - 1) * norm.pdf(x),
                  -np.inf, y)
    return val


def gue_edge_cdf(xs) -> float:
    """P(lambda^1_1 <= x_1, ..., lambda^k_k <= x_k) for the GUE-corners
    right edge: det[Psi^{j-i-1}(x_j)]_{i,j=1..k}."""
    xs = sorted(float(x) for x in xs)
    k = len(xs)
    if not (1 <= k <= 5):
        raise ValueError(f"k = {k} outside 1..5")
    mat = np.empty((k, k))
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            mat[i - 1, j - 1] = psi(j - i - 1, xs[j - 1])
    return float(np.linalg.det(mat))


def gue_mc_oracle(k: int, n_samples: int, rng) -> np.ndarray:
    """Sample (lambda^1_1, ..., lambda^k_k) for n_samples GUE matrices:
    diagonal N(0,1), off-diagonal re/im N(0, 1/2); returns (n_samples, k)."""
    if not (1 <= k <= 5):
        raise ValueError(f"k = {k} outside 1..5")
    diag = rng.standard_normal((n_samples, k))
    re = rng.standard_normal((n_samples, k, k)) * math.sqrt(0.5)
    im = rng.standard_normal((n_samples, k, k)) * math.sqrt(0.5)
    upper = np.triu(re + 1j * im, 1)
    H = upper + np.conj(np.transpose(upper, (0, 2, 1)))
    idx = np.arange(k)
    H[:, idx, idx] = diag
    out = np.empty((n_samples, k))
    out[:, 0] = H[:, 0, 0].real
    for r in range(2, k + 1):
        ev = np.linalg.eigvalsh(H[:, :r, :r])
        out[:, r - 1] = ev[:, -1]
    return out


def gue_corners_interlace(H: np.ndarray) -> bool:
    """Cauchy interlacing of all corner spectra of one Hermitian matrix."""
    k = H.shape[0]
    prev = None
    for r in range(1, k + 1):
        ev = np.linalg.eigvalsh(H[:r, :r])
        if prev is not None:
            if not (np.all(ev[:-1] <= prev + 1e-10) and np.all(prev <= ev[1:] + 1e-10)):
                return False
        prev = ev
    return True

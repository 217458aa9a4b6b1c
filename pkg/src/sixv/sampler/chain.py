"""The full exact sampler: base configuration plus M sequential v-sweeps."""
from __future__ import annotations

import numpy as np

from ..core.params import ModelParams, require_valid
from ..core.paths import PathCollection
from ..core.signatures import Signature
from .kernels import weight_vector, sweep_update, zero_row, row_update
from .rng import RngStream
from .steps import step_probs


def zero_sampler(N: int, p: ModelParams, rng: RngStream,
                 sample_index: int = 0) -> PathCollection:
    """Sample the M = 0 measure (base stochastic six-vertex model, shifted so
    that column 0 is all pass-through vertices)."""
    require_valid(ModelParams(q=p.q, u=p.u[:N]))
    mat = _zero_matrix(N, p, rng, sample_index)
    return _matrix_to_paths(mat, N)


def _zero_matrix(N: int, p: ModelParams, rng: RngStream, sample_index: int):
    stream = rng.child(sample_index)
    mat = np.zeros((N, N), dtype=np.int64)
    prev = np.empty(0, dtype=np.int64)
    out = np.empty(N + 1, dtype=np.int64)
    for y in range(1, N + 1):
        b1, b2 = step_probs(p.u[y - 1], p.q)
        n_uni = max(256, 8 * (prev.shape[0] + 4))
        while True:
            uni = stream.block(sweep=0, row=y, n=n_uni)
            nout, used = zero_row(prev, b1, b2, uni, out)
            if used >= 0:
                break
            n_uni *= 2
        prev = out[:nout].copy()
        mat[y - 1, :y] = prev[::-1]
    return mat


def chain_sampler(p: ModelParams, rng: RngStream,
                  sample_index: int = 0) -> PathCollection:
    """Draw one path collection from the half-strip measure: zero_sampler,
    then one sequential-update sweep per v parameter."""
    require_valid(p)
    N, M = p.N, p.M
    q, s = p.q, p.s
    lam = _zero_matrix(N, p, rng, sample_index)
    out = np.zeros_like(lam)
    wat = np.empty(N + 2)
    wblw = np.empty(N + 2)
    gbuf = np.empty((7, N + 2))
    stream = rng.child(sample_index)
    budget = sum(2 * k + 8 for k in range(1, N + 1))
    wcache = {}
    for sweep in range(1, M + 1):
        v = p.v[sweep - 1]
        if v not in wcache:
            wcache[v] = np.stack([weight_vector(p.u[k - 1], v, s, q)
                                  for k in range(1, N + 1)])
        Wmat = wcache[v]
        uni = stream.block(sweep=sweep, row=0, n=budget)
        rc = sweep_update(N, lam, out, Wmat, uni, wat, wblw, gbuf)
        if rc < 0:
            raise ArithmeticError(
                f"inconsistent row-update weights in sweep {sweep} "
                f"(seed={rng.seed}, sample={sample_index})")
        lam, out = out, lam
    return _matrix_to_paths(lam, N)


def row_sampler(k: int, u: float, v: float, lam, mu, rng,
                q: float) -> Signature:
    """One sequential-update row draw: nu ~ F_{nu/mu}(u) G^c_{nu/lam}(v),
    for lam strict of length k, mu strict of length k - 1.

    rng may be an RngStream (one draw per call, stream (1, 1)) or a numpy
    Generator (consumed statefully, for repeated draws).
    """
    s = 1.0 / q**0.5
    lam = np.asarray(tuple(lam), dtype=np.int64)
    mu = np.asarray(tuple(mu), dtype=np.int64)
    if lam.shape[0] != k or mu.shape[0] != k - 1:
        raise ValueError("need len(lam) = k, len(mu) = k - 1")
    W = weight_vector(u, v, s, q)
    out = np.empty(k, dtype=np.int64)
    wat = np.empty(k + 2)
    wblw = np.empty(k + 2)
    gbuf = np.empty((7, k + 2))
    if isinstance(rng, RngStream):
        uni = rng.block(sweep=1, row=1, n=2 * k + 8)
    else:
        uni = rng.random(2 * k + 8)
    rc = row_update(k, lam, mu, out, W, uni, 0, wat, wblw, gbuf)
    if rc < 0:
        raise ArithmeticError("no admissible row placement (inconsistent "
                              "bounds or zero weight state)")
    return Signature(tuple(int(x) for x in out))


def _matrix_to_paths(mat: np.ndarray, N: int) -> PathCollection:
    rows = tuple(Signature(tuple(int(x) for x in mat[k - 1, :k]))
                 for k in range(1, N + 1))
    return PathCollection(rows)


def sample_record(w: PathCollection, seed: int, sweeps: int) -> str:
    """Raw-sample persistence record: header then the path text block."""
    return f"seed={seed} sweeps={sweeps} N={w.N}\n{w.to_text()}"

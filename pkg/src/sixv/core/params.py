"""Model parameters (q, s, u, v) and their admissibility checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ModelParams:
    """Parameter tuple of the half-strip measure.

    s is derived (s = q^{-1/2}) and never set independently.  Construction
    does not validate; use validate_params so that invalid tuples can be
    inspected and reported.
    """

    q: float
    u: tuple = ()
    v: tuple = ()
    strict_u: bool = False  # enforce u_i < (s + s^3)/2, needed by asymptotics

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(float(x) for x in self.u))
        object.__setattr__(self, "v", tuple(float(x) for x in self.v))

    @property
    def s(self) -> float:
        return 1.0 / math.sqrt(self.q)

    @property
    def N(self) -> int:
        return len(self.u)

    @property
    def M(self) -> int:
        return len(self.v)

    @classmethod
    def homogeneous(cls, q, u, v, N, M, strict_u=False):
        return cls(q=q, u=(u,) * N, v=(v,) * M, strict_u=strict_u)


def validate_params(p: ModelParams):
    """Return None if p is admissible, else a string naming the first
    violated invariant."""
    if not (0.0 < p.q < 1.0):
        return f"q = {p.q} outside (0,1)"
    s = p.s
    for i, ui in enumerate(p.u, start=1):
        if ui <= s:
            return f"u_{i} <= s  ({ui} <= {s:.6g})"
    if p.strict_u:
        cap = (s + s**3) / 2.0
        for i, ui in enumerate(p.u, start=1):
            if ui >= cap:
                return f"u_{i} >= (s+s^3)/2  ({ui} >= {cap:.6g})"
    for j, vj in enumerate(p.v, start=1):
        if vj <= 0.0:
            return f"v_{j} <= 0  ({vj})"
    for i, ui in enumerate(p.u, start=1):
        for j, vj in enumerate(p.v, start=1):
            if ui * vj >= 1.0:
                return f"u_{i} v_{j} >= 1  ({ui * vj:.6g})"
    return None


def require_valid(p: ModelParams) -> ModelParams:
    msg = validate_params(p)
    if msg is not None:
        raise ValueError(f"invalid model parameters: {msg}")
    return p


def delta_parameter(p: ModelParams) -> float:
    """Phase parameter (s + 1/s)/2 of the vertex-weight family; always > 1
    for q in (0,1), i.e. the ferroelectric regime."""
    s = p.s
    return 0.5 * (s + 1.0 / s)


def admissibility_ratio(u: float, v: float, s: float) -> float:
    """|((u-s)/(1-su)) * ((v-s)/(1-sv))|; < 1 makes the infinite sums of the
    Cauchy identities absolutely convergent."""
    return abs((u - s) / (1.0 - s * u) * (v - s) / (1.0 - s * v))

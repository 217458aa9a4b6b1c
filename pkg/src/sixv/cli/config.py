"""Campaign configuration: flat key=value text files with command-line
overrides."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

from ..core.params import ModelParams, validate_params

_DEFAULTS = dict(q=0.5, u=1.5, v=0.6, N=100, M=100, n_samples=1, seed=1,
                 outputs="raw", outdir=".", threads=1)
_OUTPUT_KINDS = {"raw", "holes", "height-variance", "edge-cdf"}


@dataclass(frozen=True)
class CampaignConfig:
    q: float
    u: float
    v: float
    N: int
    M: int
    n_samples: int
    seed: int
    outputs: tuple
    outdir: str
    threads: int

    def params(self) -> ModelParams:
        return ModelParams.homogeneous(self.q, self.u, self.v, self.N, self.M)

    def validate(self):
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        bad = set(self.outputs) - _OUTPUT_KINDS
        if bad:
            raise ValueError(f"unknown outputs: {sorted(bad)}")
        msg = validate_params(self.params())
        if msg is not None:
            raise ValueError(f"invalid parameters: {msg}")
        return self

    def effective_threads(self) -> int:
        env = os.environ.get("SIXV_THREADS")
        return max(1, int(env)) if env else max(1, self.threads)


def parse_config(path=None, overrides=()) -> CampaignConfig:
    """Read key=value lines (later keys win), then apply overrides given as
    'key=value' strings."""
    raw = dict(_DEFAULTS)
    if path:
        with open(path) as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"bad config line: {line!r}")
                key, val = line.split("=", 1)
                raw[key.strip()] = val.strip()
    for ov in overrides:
        if "=" not in ov:
            raise ValueError(f"override must be key=value: {ov!r}")
        key, val = ov.split("=", 1)
        raw[key.strip()] = val.strip()
    unknown = set(raw) - set(_DEFAULTS)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    outputs = raw["outputs"]
    if isinstance(outputs, str):
        outputs = tuple(tok.strip() for tok in outputs.split(",") if tok.strip())
    cfg = CampaignConfig(
        q=float(raw["q"]), u=float(raw["u"]), v=float(raw["v"]),
        N=int(raw["N"]), M=int(raw["M"]), n_samples=int(raw["n_samples"]),
        seed=int(raw["seed"]), outputs=outputs, outdir=str(raw["outdir"]),
        threads=int(raw["threads"]),
    )
    return cfg.validate()

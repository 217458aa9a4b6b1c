"""Signatures: weakly decreasing integer tuples, the row states of the model."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Signature:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        for a, b in zip(self.parts, self.parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {self.parts}")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def is_nonneg(self) -> bool:
        return not self.parts or self.parts[-1] >= 0

    @property
    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def require(self, nonneg=False, strict=False) -> "Signature":
        if nonneg and not self.is_nonneg:
            raise ValueError(f"negative part in {self.parts}")
        if strict and not self.is_strict:
            raise ValueError(f"repeated part in {self.parts}")
        return self

    def multiplicities(self) -> dict:
        """Multiplicative notation: value -> multiplicity (nonneg parts)."""
        out = {}
        for x in self.parts:
            out[x] = out.get(x, 0) + 1
        return out

    def shifted(self, k: int) -> "Signature":
        return Signature(tuple(x + k for x in self.parts))


EMPTY = Signature(())


def interlaces_below(mu, lam) -> bool:
    """mu (length n-1) interlaces below lam (length n):
    lam_1 >= mu_1 >= lam_2 >= ... >= mu_{n-1} >= lam_n."""
    mu = tuple(mu)
    lam = tuple(lam)
    if len(lam) != len(mu) + 1:
        return False
    for i in range(len(mu)):
        if not (lam[i] >= mu[i] >= lam[i + 1]):
            return False
    return True

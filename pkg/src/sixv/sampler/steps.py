"""Bernoulli step probabilities of the base stochastic six-vertex dynamics."""
from __future__ import annotations

import math


def step_probs(u: float, q: float) -> tuple:
    """(b1, b2) with b1 = (1 - u q^{1/2})/(1 - u q^{-1/2}) the probability
    that an incoming vertical continues up, and b2 = (1/q - u q^{-1/2}) /
    (1 - u q^{-1/2}) that an incoming horizontal continues right; both lie in
    (0, 1) exactly when u > q^{-1/2}."""
    s = 1.0 / math.sqrt(q)
    if u <= s:
        raise ValueError(f"u = {u} must exceed q^(-1/2) = {s}")
    d = 1.0 - u * s
    b1 = (1.0 - u * math.sqrt(q)) / d
    b2 = (1.0 / q - u * s) / d
    return b1, b2

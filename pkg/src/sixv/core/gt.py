"""Gelfand-Tsetlin pattern counting and polytope volume.

Counting conventions follow the increasing-row presentation (lambda_1 <= ...
<= lambda_n); decreasing signatures from the rest of the package are adapted
at the call boundary via `ascending`.
"""
from __future__ import annotations

from fractions import Fraction


def ascending(parts) -> tuple:
    """Adapter between the decreasing signature convention and the
    increasing one used here."""
    return tuple(sorted(parts))


def gt_count(parts, strict: bool = False) -> int:
    """Number of Gelfand-Tsetlin patterns with top row `parts` (weakly
    increasing); strict=True counts strictly interlacing patterns with a
    strictly increasing top row.  Exact integer arithmetic.

    Weak:   prod_{i<j} (l_j - l_i + j - i) / (j - i)
    Strict: prod_{i<j} (l_j - l_i - j + i) / (j - i)
    """
    lam = ascending(parts)
    n = len(lam)
    if strict and any(a >= b for a, b in zip(lam, lam[1:])):
        raise ValueError("strict counting needs strictly increasing parts")
    total = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            gap = lam[j] - lam[i]
            if strict:
                gap -= j - i
            else:
                gap += j - i
            total *= Fraction(gap, j - i)
    if total.denominator != 1:
        raise AssertionError(f"non-integer pattern count for {lam}: {total}")
    return int(total)


def gt_count_brute(parts, strict: bool = False) -> int:
    """Independent oracle: explicit enumeration of interlacing triangles."""
    lam = ascending(parts)
    if len(lam) <= 1:
        return 1
    n = len(lam)

    def rows_below(top):
        def build(i, acc):
            if i == n - 1:
                yield tuple(acc)
                return
            lo, hi = top[i], top[i + 1]
            if strict:
                lo, hi = lo + 1, hi - 1
            if acc:
                lo = max(lo, acc[-1] + (1 if strict else 0))
            for x in range(lo, hi + 1):
                yield from build(i + 1, acc + [x])
        yield from build(0, [])

    return sum(gt_count_brute(below, strict) for below in rows_below(lam))


def gt_volume(xs) -> float:
    """Euclidean volume of the Gelfand-Tsetlin polytope over real top row xs
    (increasing); coincident entries contribute nothing (delta-mass
    convention), so the volume of a fully degenerate polytope is 1."""
    lam = tuple(sorted(float(x) for x in xs))
    n = len(lam)
    out = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            if lam[i] != lam[j]:
                out *= (lam[j] - lam[i]) / (j - i)
    return out

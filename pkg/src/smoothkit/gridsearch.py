"""Deterministic maximization of smooth 1-D functions: dense grid, then golden section."""

from __future__ import annotations

import math

import numpy as np

__all__ = ["golden_max", "refine_grid_max"]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(fn, lo: float, hi: float, xtol: float = 1e-12) -> tuple[float, float]:
    """Golden-section maximization of fn on [lo, hi]; returns (value, argmax)."""
    a, b = float(lo), float(hi)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = float(fn(c))
    fd = float(fn(d))
    while (b - a) > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = float(fn(c))
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = float(fn(d))
    x = 0.5 * (a + b)
    return float(fn(x)), x


def refine_grid_max(fn, grid, xtol: float = 1e-12, top: int = 3) -> tuple[float, float]:
    """Global maximum of fn over the span of a dense grid; returns (value, argmax).

    Every local maximum of the sampled values defines a bracket. The `top`
    best brackets, plus any bracket sampled within 5% of the best (capped
    at 12 total; symbols with many exactly tied peaks need only one), are
    polished by golden section. Refined values that tie within 1e-12
    relative resolve to the smallest argument, keeping the result
    deterministic for a fixed grid.
    """
    xs = np.asarray(grid, dtype=float)
    fs = np.asarray(fn(xs), dtype=float)
    n = xs.size
    if n < 2:
        return float(fs[0]), float(xs[0])
    interior = np.nonzero((fs[1:-1] >= fs[:-2]) & (fs[1:-1] >= fs[2:]))[0] + 1
    peaks = list(interior)
    if fs[0] >= fs[1]:
        peaks.insert(0, 0)
    if fs[n - 1] >= fs[n - 2]:
        peaks.append(n - 1)
    order = sorted(peaks, key=lambda i: (-fs[i], i))
    best_sample = fs[order[0]]
    chosen = [
        i
        for rank, i in enumerate(order)
        if rank < top or (rank < 12 and fs[i] >= 0.95 * best_sample)
    ]
    results = []
    for i in chosen:
        lo = xs[max(i - 1, 0)]
        hi = xs[min(i + 1, n - 1)]
        results.append(golden_max(fn, lo, hi, xtol))
    best_val = max(v for v, _ in results)
    tie_band = 1e-12 * max(abs(best_val), 1.0)
    best_x = min(x for v, x in results if v >= best_val - tie_band)
    return best_val, best_x

"""Discrete averaging kernels: named families, symmetrization, polynomial form, CSV I/O.

A kernel is a finitely supported weight function on {-n, ..., n} whose
weights sum to 1, so convolving with it is a local average. Symmetric
kernels are stored in half-width form (w_0..w_n), which makes the evenness
a property of the type rather than of the data.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

import numpy as np

from .chebyshev import ChebSeries
from .extremal import build_solution

__all__ = [
    "SymmetricKernel",
    "GeneralKernel",
    "constant_kernel",
    "triangle_kernel",
    "epanechnikov_kernel",
    "optimal_kernel",
    "symmetrize",
    "to_polynomial",
    "full_weights",
    "write_kernel_csv",
    "read_kernel_csv",
]

MAX_HALF_WIDTH = 4096


@dataclass(frozen=True, eq=False)
class SymmetricKernel:
    """Even weights w_0..w_n with u(k) = u(-k) = w_|k| and total mass 1."""

    half_width: int
    weights: np.ndarray

    def __post_init__(self):
        w = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if self.half_width < 0 or w.size != self.half_width + 1:
            raise ValueError("symmetric kernel needs half_width + 1 weights")
        if not np.all(np.isfinite(w)):
            raise ValueError("kernel weights must be finite")
        if abs(w[0] + 2.0 * float(w[1:].sum()) - 1.0) > 1e-9:
            raise ValueError("kernel weights must sum to 1")
        object.__setattr__(self, "weights", w)


@dataclass(frozen=True, eq=False)
class GeneralKernel:
    """Weights w_{-n}..w_n (not necessarily even) with total mass 1."""

    half_width: int
    weights: np.ndarray

    def __post_init__(self):
        w = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if self.half_width < 0 or w.size != 2 * self.half_width + 1:
            raise ValueError("general kernel needs 2 * half_width + 1 weights")
        if not np.all(np.isfinite(w)):
            raise ValueError("kernel weights must be finite")
        if abs(float(w.sum()) - 1.0) > 1e-9:
            raise ValueError("kernel weights must sum to 1")
        object.__setattr__(self, "weights", w)


def constant_kernel(n: int) -> SymmetricKernel:
    """Flat moving-average weights u(k) = 1/(2n+1)."""
    if n < 0:
        raise ValueError("half width must be nonnegative")
    return SymmetricKernel(n, np.full(n + 1, 1.0 / (2 * n + 1)))


def triangle_kernel(n: int) -> SymmetricKernel:
    """Triangle weights u(k) = (n + 1 - |k|) / (n + 1)^2."""
    if n < 0:
        raise ValueError("half width must be nonnegative")
    k = np.arange(n + 1)
    return SymmetricKernel(n, (n + 1.0 - k) / (n + 1.0) ** 2)


def epanechnikov_kernel(n: int) -> SymmetricKernel:
    """Parabola-sampled weights u(k) = 3 (n^2 - k^2) / (n (4n^2 - 1)).

    The formula divides by zero at n = 0, so that case is rejected rather
    than patched.
    """
    if n < 1:
        raise ValueError("Epanechnikov weights need half width >= 1")
    k = np.arange(n + 1)
    return SymmetricKernel(n, 3.0 * (n * n - k * k) / (n * (4.0 * n * n - 1.0)))


def optimal_kernel(n: int) -> SymmetricKernel:
    """Kernel minimizing the sharp second-difference constant at half width n.

    The weights are the Chebyshev coefficients of the degree-n minimax
    polynomial S: w_0 = c_0 and w_k = c_k / 2, which is the discrete
    orthogonality quadrature of S against T_k.
    """
    if not 0 <= n <= MAX_HALF_WIDTH:
        raise ValueError(f"half width must be in [0, {MAX_HALF_WIDTH}]")
    w = build_solution(n).S.coeffs.copy()
    w[1:] *= 0.5
    return SymmetricKernel(n, w)


def symmetrize(u: GeneralKernel) -> SymmetricKernel:
    """Average a kernel with its reflection: w_k = (u(k) + u(-k)) / 2."""
    n = u.half_width
    w = u.weights
    return SymmetricKernel(n, 0.5 * (w[n:] + w[n::-1]))


def to_polynomial(u: SymmetricKernel) -> ChebSeries:
    """Cosine-series polynomial of the kernel: p_u = w_0 + sum 2 w_k T_k.

    p_u(cos xi) equals the kernel's Fourier transform at xi, and p_u(1) = 1
    restates the normalization.
    """
    c = u.weights.copy()
    c[1:] *= 2.0
    return ChebSeries(c)


def full_weights(u: SymmetricKernel | GeneralKernel) -> np.ndarray:
    """Weights laid out over k = -n..n for either kernel representation."""
    if isinstance(u, SymmetricKernel):
        w = u.weights
        return np.concatenate([w[:0:-1], w])
    return u.weights.copy()


def write_kernel_csv(u: SymmetricKernel | GeneralKernel, path_or_file) -> None:
    """Write the kernel file format: header `k,weight`, one row per k in -n..n."""
    rows = full_weights(u)
    ks = range(-u.half_width, u.half_width + 1)

    def _emit(fh):
        fh.write("k,weight\n")
        for k, w in zip(ks, rows):
            fh.write(f"{k},{w:.17g}\n")

    if hasattr(path_or_file, "write"):
        _emit(path_or_file)
    else:
        with open(path_or_file, "w", newline="") as fh:
            _emit(fh)


def read_kernel_csv(path: str | os.PathLike, symmetric: bool = False):
    """Read a kernel file; returns a GeneralKernel, or a SymmetricKernel if requested.

    Validates the header, a contiguous index range -n..n, normalization
    within 1e-9, and (when symmetric=True) evenness within 1e-9. A symmetric
    result averages the two arms so the stored half-widths are exactly even.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["k", "weight"]:
            raise ValueError(f"{path}: expected header 'k,weight'")
        ks = []
        ws = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise ValueError(f"{path} row {lineno}: expected two fields")
            try:
                ks.append(int(row[0]))
                ws.append(float(row[1]))
            except ValueError:
                raise ValueError(f"{path} row {lineno}: cannot parse {row!r}") from None
    if not ks:
        raise ValueError(f"{path}: no kernel rows")
    n = (len(ks) - 1) // 2
    if ks != list(range(-n, n + 1)):
        raise ValueError(f"{path}: indices must run contiguously from -n to n")
    w = np.asarray(ws, dtype=float)
    if not np.all(np.isfinite(w)):
        raise ValueError(f"{path}: weights must be finite")
    if abs(float(w.sum()) - 1.0) > 1e-9:
        raise ValueError(f"{path}: weights must sum to 1 within 1e-9")
    if not symmetric:
        return GeneralKernel(n, w)
    asym = float(np.max(np.abs(w - w[::-1]))) if n else 0.0
    if asym > 1e-9:
        raise ValueError(f"{path}: kernel is asymmetric by {asym:.3g}")
    return SymmetricKernel(n, 0.5 * (w[n:] + w[n::-1]))

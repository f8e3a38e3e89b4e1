"""Operator norms of smoothing-then-differencing, computed as multiplier symbol maxima.

For a kernel u and difference order m, the map f -> D^m(u * f) on square-
summable sequences has operator norm equal to the maximum over frequencies
of (2 |sin(xi/2)|)^m |u_hat(xi)|. The maximum of this trigonometric
polynomial is located on a fixed dense grid and polished by golden section,
so results are deterministic. For symmetric kernels and m = 2 the same
quantity can be computed as 2 max |(1-x) p_u(x)| over [-1, 1], giving an
independent cross-check path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import clenshaw_eval
from .gridsearch import refine_grid_max
from .kernels import GeneralKernel, SymmetricKernel, full_weights, to_polynomial
from .series import TimeSeries

__all__ = [
    "MultiplierBound",
    "symbol_magnitude",
    "operator_norm",
    "operator_norm_via_polynomial",
    "closed_form_c2",
    "rayleigh_quotient",
    "wave_packet",
]


@dataclass(frozen=True)
class MultiplierBound:
    """Computed norm, the frequency attaining it, and the method used."""

    value: float
    argmax_xi: float
    order: int
    method: str


def _symbol_fn(u: SymmetricKernel | GeneralKernel, m: int):
    """Closure evaluating the symbol; kernel-dependent setup hoisted out."""
    if isinstance(u, SymmetricKernel):
        p = to_polynomial(u)

        def fn(xi):
            x = np.cos(xi)
            return (2.0 * np.abs(np.sin(0.5 * np.asarray(xi, dtype=float)))) ** m * np.abs(
                clenshaw_eval(p, x)
            )

    else:
        ks = np.arange(-u.half_width, u.half_width + 1)
        w = u.weights

        def fn(xi):
            x = np.asarray(xi, dtype=float)
            mag = np.abs(np.exp(-1j * np.multiply.outer(x, ks)) @ w)
            return (2.0 * np.abs(np.sin(0.5 * x))) ** m * mag

    return fn


def symbol_magnitude(u: SymmetricKernel | GeneralKernel, m: int, xi):
    """Symbol value (2 |sin(xi/2)|)^m |u_hat(xi)| at frequency xi.

    Symmetric kernels use the real cosine series u_hat(xi) = p_u(cos xi);
    general kernels evaluate the complex exponential sum directly.
    """
    if m < 1:
        raise ValueError("difference order must be at least 1")
    out = _symbol_fn(u, m)(xi)
    return float(out) if np.ndim(xi) == 0 else out


def operator_norm(u: SymmetricKernel | GeneralKernel, m: int) -> MultiplierBound:
    """Sharp constant of the smoothing inequality, found on the frequency torus.

    The symbol is a trigonometric polynomial of degree n + m, so a grid of
    16 (n + m) + 64 points brackets every local maximum (Bernstein bound on
    the derivative); brackets are refined to 1e-12 in xi. Ties resolve to
    the smallest frequency.
    """
    if m < 1:
        raise ValueError("difference order must be at least 1")
    count = 16 * (u.half_width + m) + 64
    grid = np.linspace(0.0, 2.0 * math.pi, count, endpoint=False)
    value, xi = refine_grid_max(_symbol_fn(u, m), grid)
    return MultiplierBound(value, xi, m, "torus_grid")


def operator_norm_via_polynomial(u: SymmetricKernel) -> MultiplierBound:
    """Order-2 norm by the substitution x = cos(xi): 2 max |(1-x) p_u(x)|.

    Only the second-difference case reduces this way, since
    |exp(i xi) - 1|^2 = 2 (1 - cos xi).
    """
    if not isinstance(u, SymmetricKernel):
        raise ValueError("polynomial form needs a symmetric kernel")
    p = to_polynomial(u)

    def weighted(theta):
        x = np.cos(theta)
        return 2.0 * np.abs((1.0 - x) * clenshaw_eval(p, x))

    grid = np.linspace(0.0, math.pi, 16 * (u.half_width + 2) + 64)
    value, theta = refine_grid_max(weighted, grid)
    return MultiplierBound(value, theta, 2, "polynomial_form")


def closed_form_c2(n: int) -> float:
    """Smallest possible order-2 constant over all half-width-n kernels."""
    if n < 0:
        raise ValueError("half width must be nonnegative")
    half = math.pi / (2 * n + 2)
    return 4.0 * math.sin(half) / ((n + 1) * (1.0 + math.cos(half)))


def rayleigh_quotient(u: SymmetricKernel | GeneralKernel, m: int, f: TimeSeries) -> float:
    """Achieved ratio norm(D^m(u * f)) / norm(f) for one concrete signal.

    The signal is treated as finitely supported: the convolution keeps its
    full support and the differences are taken over a zero-padded window, so
    no mass is lost at the ends. Always at most the operator norm.
    """
    if m < 1:
        raise ValueError("difference order must be at least 1")
    fnorm = float(np.linalg.norm(f.values))
    if fnorm == 0.0:
        raise ValueError("signal must not be identically zero")
    smoothed = np.convolve(f.values, full_weights(u), mode="full")
    diffed = np.diff(np.pad(smoothed, m), m)
    return float(np.linalg.norm(diffed)) / fnorm


def wave_packet(xi_star: float, sigma: float, length: int) -> TimeSeries:
    """Gaussian-windowed oscillation cos(xi_star k) concentrating near xi_star.

    Spectral width is O(1/sigma), so for sigma large the packet nearly
    attains the operator norm when xi_star is the symbol's argmax. The
    window must cover the envelope: length >= 8 sigma keeps the truncated
    tail below exp(-8).
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    if length < 1:
        raise ValueError("length must be positive")
    if length < 8 * sigma:
        raise ValueError("window too short for the envelope: need length >= 8 sigma")
    k = np.arange(length, dtype=float)
    center = 0.5 * (length - 1)
    envelope = np.exp(-((k - center) ** 2) / (2.0 * sigma * sigma))
    return TimeSeries(envelope * np.cos(xi_star * k))

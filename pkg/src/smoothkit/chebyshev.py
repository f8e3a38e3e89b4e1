"""Chebyshev-basis machinery: evaluation, nodes, discrete transform, deflation.

Everything runs in the trigonometric parameterization x = cos(theta), which
keeps evaluation uniformly stable up to the supported degree (4096).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.fft import dct

__all__ = [
    "ChebSeries",
    "MAX_DEGREE",
    "eval_T",
    "eval_U",
    "cheb_nodes",
    "clenshaw_eval",
    "transform",
    "deflate_at_one",
]

# Arguments may exceed [-1, 1] by this much (roundoff from upstream cos calls)
# before they are rejected instead of clamped.
CLAMP_BAND = 1e-12

MAX_DEGREE = 4096


@dataclass(frozen=True, eq=False)
class ChebSeries:
    """Polynomial sum(c_k * T_k(x)) stored by its coefficients c_0..c_d."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("ChebSeries needs a non-empty 1-D coefficient list")
        if not np.all(np.isfinite(c)):
            raise ValueError("ChebSeries coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1


def _domain(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > 1.0 + CLAMP_BAND):
        raise ValueError("evaluation point outside [-1, 1] beyond the clamp band")
    return np.clip(arr, -1.0, 1.0)


def eval_T(k: int, x):
    """First-kind value T_k(x) = cos(k * arccos(x))."""
    if k < 0:
        raise ValueError("order k must be nonnegative")
    out = np.cos(k * np.arccos(_domain(x)))
    return float(out) if np.ndim(x) == 0 else out


def eval_U(k: int, x):
    """Second-kind value U_k(x) = sin((k+1) theta) / sin(theta) at x = cos(theta).

    Close to x = +-1 the quotient degenerates; there the limit value
    (+-1)^k * (k+1) is returned instead.
    """
    if k < 0:
        raise ValueError("order k must be nonnegative")
    arr = _domain(x)
    theta = np.arccos(arr)
    s = np.sin(theta)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.sin((k + 1) * theta) / s
    out = np.where(s < 1e-8, np.sign(arr) ** k * (k + 1.0), vals)
    return float(out) if np.ndim(x) == 0 else out


def cheb_nodes(M: int) -> np.ndarray:
    """Gauss-Chebyshev points cos(pi (j + 1/2) / M), decreasing, none equal +-1."""
    if M < 1:
        raise ValueError("node count must be at least 1")
    return np.cos(np.pi * (np.arange(M) + 0.5) / M)


def clenshaw_eval(s: ChebSeries, x):
    """Evaluate the series at x by Clenshaw's recurrence."""
    c = s.coeffs
    if np.ndim(x) == 0:
        # plain-float loop; numpy scalar arithmetic is ~20x slower here
        t = float(x)
        if abs(t) > 1.0 + CLAMP_BAND:
            raise ValueError("evaluation point outside [-1, 1] beyond the clamp band")
        t = min(1.0, max(-1.0, t))
        b1 = 0.0
        b2 = 0.0
        t2 = 2.0 * t
        for ck in c[:0:-1].tolist():
            b1, b2 = t2 * b1 - b2 + ck, b1
        return t * b1 - b2 + float(c[0])
    arr = _domain(x)
    b1 = np.zeros_like(arr)
    b2 = np.zeros_like(arr)
    for ck in c[:0:-1]:
        b1, b2 = 2.0 * arr * b1 - b2 + ck, b1
    out = arr * b1 - b2 + c[0]
    return out


def transform(values) -> ChebSeries:
    """Interpolate samples taken at cheb_nodes(len(values)) into a ChebSeries.

    The type-II DCT computes exactly the discrete orthogonality sums
    c_0 = mean(v) and c_k = (2/M) sum_j v_j T_k(x_j), so a polynomial of
    degree <= M-1 sampled at the M nodes is recovered to roundoff.
    """
    v = np.atleast_1d(np.asarray(values, dtype=float))
    if v.ndim != 1 or v.size == 0:
        raise ValueError("transform needs a non-empty 1-D sample vector")
    if not np.all(np.isfinite(v)):
        raise ValueError("samples must be finite")
    c = dct(v, type=2) / v.size
    c[0] *= 0.5
    return ChebSeries(c)


def deflate_at_one(q: ChebSeries) -> ChebSeries:
    """Divide out the root at x = 1: returns s with (x - 1) * s(x) = q(x).

    The quotient is sampled at cheb_nodes(degree), which stay clear of the
    removable singularity, and re-interpolated. The product identity is then
    re-checked at 32 fixed pseudo-random points; failure raises rather than
    returning a silently truncated quotient.
    """
    scale = float(np.sum(np.abs(q.coeffs)))
    # clenshaw_eval(q, 1) is exactly the coefficient sum
    if abs(float(np.sum(q.coeffs))) > 1e-9 * scale:
        raise ValueError("series does not vanish at x = 1; cannot deflate")
    if q.degree == 0:
        raise ValueError("cannot deflate a degree-0 series")
    nodes = cheb_nodes(q.degree)
    s = transform(clenshaw_eval(q, nodes) / (nodes - 1.0))
    rng = np.random.default_rng(193)
    pts = rng.uniform(-1.0, 1.0, 32)
    resid = np.abs((pts - 1.0) * clenshaw_eval(s, pts) - clenshaw_eval(q, pts))
    if scale > 0.0 and float(np.max(resid)) > 1e-10 * scale:
        raise ArithmeticError("deflation round-trip check failed")
    return s

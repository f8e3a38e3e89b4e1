"""Minimax solutions of the weighted problem: minimize max |(1-x) p(x)| with p(1) = 1.

For degree d the optimizer is a rescaled Chebyshev polynomial composed with
an affine stretch that parks one of its zeros at x = 1. The product
(1-x) S(x) then equioscillates between -alpha and +alpha at d+1 points,
which certifies optimality and pins the minimax value alpha in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import MAX_DEGREE, ChebSeries, cheb_nodes, clenshaw_eval, deflate_at_one, transform
from .gridsearch import refine_grid_max

__all__ = [
    "ExtremalSolution",
    "EquioscillationReport",
    "LowerBoundReport",
    "alpha_closed_form",
    "stretch_map",
    "build_solution",
    "verify_equioscillation",
    "minimax_lower_bound_check",
]


@dataclass(frozen=True, eq=False)
class ExtremalSolution:
    """Degree-d minimax solution and the data certifying it.

    S is the optimal polynomial, q(x) = (1-x) S(x) the weighted product, and
    alternation_points the d+1 inputs y_1 > ... > y_{d+1} = -1 at which q
    alternates between +alpha and -alpha.
    """

    degree: int
    alpha: float
    stretch_scale: float
    stretch_shift: float
    S: ChebSeries
    q: ChebSeries
    alternation_points: np.ndarray


@dataclass(frozen=True, eq=False)
class EquioscillationReport:
    passed: bool
    residuals: np.ndarray
    grid_max: float
    alpha: float


@dataclass(frozen=True)
class LowerBoundReport:
    passed: bool
    max_weighted: float
    alpha: float
    gap: float


def alpha_closed_form(d: int) -> float:
    """Minimax value 2 sin(pi/2N) / (N (1 + cos(pi/2N))) with N = d + 1."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    N = d + 1
    half = math.pi / (2 * N)
    return 2.0 * math.sin(half) / (N * (1.0 + math.cos(half)))


def stretch_map(d: int, x):
    """Affine map L with L(-1) = -1 and L(1) = cos(pi/(2(d+1))), the first T_{d+1} zero."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    scale = 0.5 * (1.0 + math.cos(math.pi / (2 * (d + 1))))
    out = scale * (np.asarray(x, dtype=float) + 1.0) - 1.0
    return float(out) if np.ndim(x) == 0 else out


def _stretched_cheb(d: int, x):
    """T_{d+1}(L(x)) via the half-angle form, stable even where L(x) nears the zero.

    With c = sin^2(pi/(4N)) the identity 1 - L(x) = (1-x) + c (1+x) has no
    cancellation, so the angle arccos(L(x)) is recovered to full relative
    precision near x = 1.
    """
    N = d + 1
    c = math.sin(math.pi / (4 * N)) ** 2
    arr = np.asarray(x, dtype=float)
    half = np.sqrt(np.clip(((1.0 - arr) + c * (1.0 + arr)) / 2.0, 0.0, 1.0))
    return np.cos(2.0 * N * np.arcsin(half))


def build_solution(d: int) -> ExtremalSolution:
    """Construct the degree-d minimax solution with its alternation data."""
    if not 0 <= d <= MAX_DEGREE:
        raise ValueError(f"degree must be in [0, {MAX_DEGREE}]")
    N = d + 1
    alpha = alpha_closed_form(d)
    scale = 0.5 * (1.0 + math.cos(math.pi / (2 * N)))
    q = transform(-alpha * _stretched_cheb(d, cheb_nodes(N + 1)))
    S = ChebSeries(-deflate_at_one(q).coeffs)
    # L^{-1}(cos(i pi / N)) for i = 1..N; cos(pi) = -1 makes y_N = -1 exact
    y = (np.cos(np.arange(1, N + 1) * (math.pi / N)) + 1.0) / scale - 1.0
    return ExtremalSolution(
        degree=d,
        alpha=alpha,
        stretch_scale=scale,
        stretch_shift=-1.0,
        S=S,
        q=q,
        alternation_points=y,
    )


def verify_equioscillation(sol: ExtremalSolution, tol: float) -> EquioscillationReport:
    """Check the alternation values of q and the grid maximum of |(1-x) S(x)|.

    Failures are reported, not raised: residuals hold |q(y_i) + alpha (-1)^i|
    per point, and the report passes iff all residuals are within tol and the
    grid maximum does not exceed alpha (1 + 1e-9).
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    N = sol.degree + 1
    signs = (-1.0) ** np.arange(1, N + 1)
    residuals = np.abs(clenshaw_eval(sol.q, sol.alternation_points) + sol.alpha * signs)
    theta = np.linspace(0.0, math.pi, 10 * N)
    x = np.cos(theta)
    grid_max = float(np.max(np.abs((1.0 - x) * clenshaw_eval(sol.S, x))))
    passed = bool(np.all(residuals <= tol)) and grid_max <= sol.alpha * (1.0 + 1e-9)
    return EquioscillationReport(passed, residuals, grid_max, sol.alpha)


def minimax_lower_bound_check(p: ChebSeries, d: int) -> LowerBoundReport:
    """Confirm max |(1-x) p(x)| >= alpha(d) for a challenger p with p(1) = 1.

    The maximum is located on an arccos-parameterized grid (extrema of
    Chebyshev-like products equidistribute in theta, not x) and polished by
    golden section.
    """
    if p.degree > d:
        raise ValueError("challenger degree exceeds the stated bound")
    if abs(float(np.sum(p.coeffs)) - 1.0) > 1e-9:
        raise ValueError("challenger must satisfy p(1) = 1")

    def weighted(theta):
        x = np.cos(theta)
        return np.abs((1.0 - x) * clenshaw_eval(p, x))

    grid = np.linspace(0.0, math.pi, 10 * (d + 2))
    m, _ = refine_grid_max(weighted, grid)
    alpha = alpha_closed_form(d)
    return LowerBoundReport(m >= alpha * (1.0 - 1e-9), m, alpha, m - alpha)

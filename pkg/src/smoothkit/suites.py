"""Named invariant suites behind the `verify` command.

Each suite re-checks the library's mathematical contracts at a configurable
half-width ceiling and returns structured pass/fail results. Randomized
sweeps use fixed seeds so identical invocations produce identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import asymptotics, extremal, kernels, multiplier, series
from .chebyshev import ChebSeries, clenshaw_eval

__all__ = ["CheckResult", "SUITE_NAMES", "run_suite", "run_suites"]

SUITE_NAMES = ("extremal", "multiplier", "asymptotics")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_symmetric(rng, n: int) -> kernels.SymmetricKernel:
    while True:
        w = rng.normal(size=n + 1)
        total = w[0] + 2.0 * w[1:].sum()
        if abs(total) > 0.1:
            return kernels.SymmetricKernel(n, w / total)


def _random_general(rng, n: int) -> kernels.GeneralKernel:
    while True:
        w = rng.normal(size=2 * n + 1)
        total = w.sum()
        if abs(total) > 0.1:
            return kernels.GeneralKernel(n, w / total)


def _random_unit_at_one(rng, d: int) -> ChebSeries:
    while True:
        c = rng.normal(size=d + 1)
        total = c.sum()
        if abs(total) > 0.05:
            return ChebSeries(c / total)


def run_extremal_suite(n_max: int = 64, tol_scale: float = 1.0) -> list[CheckResult]:
    checks: list[CheckResult] = []
    tol = 1e-9 * tol_scale

    alphas = [extremal.alpha_closed_form(d) for d in range(n_max + 1)]
    decreasing = all(a > b for a, b in zip(alphas, alphas[1:]))
    checks.append(CheckResult("alpha_monotone_decreasing", decreasing, f"d <= {n_max}"))

    worst = 0.0
    equi_ok = True
    for d in range(n_max + 1):
        sol = extremal.build_solution(d)
        report = extremal.verify_equioscillation(sol, tol)
        equi_ok &= report.passed
        worst = max(worst, float(np.max(report.residuals)))
        if d <= 64:
            s_at_one = abs(float(np.sum(sol.S.coeffs)) - 1.0)
            q_at_one = abs(float(np.sum(sol.q.coeffs)))
            q_scale = float(np.sum(np.abs(sol.q.coeffs)))
            equi_ok &= s_at_one <= tol
            equi_ok &= q_at_one <= tol * q_scale
            equi_ok &= sol.alternation_points[-1] == -1.0
    checks.append(
        CheckResult("equioscillation", equi_ok, f"d <= {n_max}, worst residual {worst:.3g}")
    )

    count_ok = True
    for d in (1, 2, 3, 5, 8, 13):
        N = d + 1
        # open at theta = 0: q(1) = 0 exactly, so its sampled sign is noise
        theta = np.linspace(0.0, math.pi, 50 * N + 1)[1:]
        vals = clenshaw_eval(extremal.build_solution(d).q, np.cos(theta))
        changes = int(np.sum(np.signbit(vals[:-1]) != np.signbit(vals[1:])))
        # N alternation points give N - 1 strict sign changes
        count_ok &= changes == N - 1
    checks.append(CheckResult("alternation_count", count_ok, "d in {1,2,3,5,8,13}"))

    rng = np.random.default_rng(20230517)
    challenger_ok = True
    for d in (1, 2, 3, 5, 8):
        for _ in range(200):
            p = _random_unit_at_one(rng, d)
            if not extremal.minimax_lower_bound_check(p, d).passed:
                challenger_ok = False
    checks.append(CheckResult("random_challengers", challenger_ok, "200 per degree"))
    return checks


def run_multiplier_suite(n_max: int = 64, tol_scale: float = 1.0) -> list[CheckResult]:
    checks: list[CheckResult] = []
    cap = min(n_max, 64)

    worst = 0.0
    for n in range(cap + 1):
        c2 = multiplier.closed_form_c2(n)
        got = multiplier.operator_norm(kernels.optimal_kernel(n), 2).value
        worst = max(worst, abs(got - c2) / c2)
    checks.append(
        CheckResult(
            "optimal_matches_closed_form",
            worst <= 1e-9 * tol_scale,
            f"n <= {cap}, worst rel err {worst:.3g}",
        )
    )

    worst = 0.0
    for n in range(cap + 1):
        got = multiplier.operator_norm(kernels.constant_kernel(n), 1).value
        worst = max(worst, abs(got - 2.0 / (2 * n + 1)))
    checks.append(
        CheckResult(
            "constant_first_order", worst <= 1e-10 * tol_scale, f"worst abs err {worst:.3g}"
        )
    )

    worst = 0.0
    for n in range(cap + 1):
        got = multiplier.operator_norm(kernels.triangle_kernel(n), 2).value
        worst = max(worst, abs(got - 4.0 / (n + 1) ** 2))
    checks.append(
        CheckResult(
            "triangle_second_order", worst <= 1e-9 * tol_scale, f"worst abs err {worst:.3g}"
        )
    )

    rng = np.random.default_rng(911)
    dual_worst = 0.0
    sharp_ok = True
    for i in range(100):
        n = 1 + i % 16
        u = _random_symmetric(rng, n)
        torus = multiplier.operator_norm(u, 2).value
        poly = multiplier.operator_norm_via_polynomial(u).value
        dual_worst = max(dual_worst, abs(torus - poly) / torus)
        sharp_ok &= torus >= multiplier.closed_form_c2(n) - 1e-9
    checks.append(
        CheckResult(
            "dual_path_agreement",
            dual_worst <= 1e-9 * tol_scale,
            f"worst rel gap {dual_worst:.3g}",
        )
    )
    checks.append(CheckResult("sharp_lower_bound", sharp_ok, "100 random symmetric kernels"))

    rng = np.random.default_rng(424242)
    first_ok = True
    for n in (2, 5, 10):
        bound = 2.0 / (2 * n + 1) - 1e-9
        for _ in range(200):
            u = _random_general(rng, n)
            first_ok &= multiplier.operator_norm(u, 1).value >= bound
    checks.append(CheckResult("first_order_lower_bound", first_ok, "200 per n in {2,5,10}"))

    rng = np.random.default_rng(77)
    contraction_ok = True
    for i in range(100):
        u = _random_general(rng, 1 + i % 12)
        before = multiplier.operator_norm(u, 2).value
        after = multiplier.operator_norm(kernels.symmetrize(u), 2).value
        contraction_ok &= after <= before + 1e-9
    checks.append(CheckResult("symmetrization_contraction", contraction_ok, "100 random kernels"))

    rng = np.random.default_rng(1234)
    rayleigh_ok = True
    for i in range(500):
        m = 1 + i % 3
        n = 1 + i % 8
        u = _random_symmetric(rng, n) if i % 2 else _random_general(rng, n)
        f = series.TimeSeries(rng.normal(size=128))
        bound = multiplier.operator_norm(u, m).value
        rayleigh_ok &= multiplier.rayleigh_quotient(u, m, f) <= bound + 1e-9
    checks.append(CheckResult("rayleigh_below_norm", rayleigh_ok, "500 random signal/kernel pairs"))

    scaled = {
        n: multiplier.closed_form_c2(n) * (n + 1) ** 2 / math.pi for n in (64, 256, 1024, 2048)
    }
    checks.append(
        CheckResult(
            "optimal_scaled_limit",
            0.99 <= scaled[2048] <= 1.01,
            ", ".join(f"n={n}: {v:.6f}" for n, v in scaled.items()),
        )
    )
    return checks


def run_asymptotics_suite(n_max: int = 64, tol_scale: float = 1.0) -> list[CheckResult]:
    checks: list[CheckResult] = []
    mu = asymptotics.compute_mu()

    mu_ok = (
        abs(mu.three_mu_over_pi - 1.015) <= 0.001 * tol_scale
        and mu.mu >= 1.0 + 1.0 / 16.0
        and abs(mu.mu - asymptotics.sinc_cos_gap(mu.alpha_star)) <= 1e-12
    )
    checks.append(
        CheckResult(
            "mu_constants",
            mu_ok,
            f"mu={mu.mu:.6f} at alpha={mu.alpha_star:.6f}, 3mu/pi={mu.three_mu_over_pi:.6f}",
        )
    )

    rng = np.random.default_rng(5150)
    mu_max_ok = bool(np.all(asymptotics.sinc_cos_gap(rng.uniform(0, 16, 1000)) <= mu.mu))
    checks.append(CheckResult("mu_is_maximum", mu_max_ok, "1000 random frequencies"))

    rng = np.random.default_rng(60601)
    ident_ok = True
    for n in range(1, min(n_max, 512) + 1):
        x = rng.uniform(-1.0, 1.0 - 1e-9, 100)
        resid = asymptotics.verify_identity(n, x)
        ident_ok &= float(np.max(resid)) <= 1e-8 * n * n * tol_scale
    checks.append(CheckResult("difference_identity", ident_ok, f"n <= {min(n_max, 512)}"))

    rng = np.random.default_rng(31337)
    beat_ok = True
    for n in range(1, 65):
        x = rng.uniform(-1.0, 1.0 - 1e-9, 1000)
        beat_ok &= asymptotics.beat_bound_check(n, x)
        beat_ok &= asymptotics.beat_bound_check(n, -1.0)
    checks.append(CheckResult("beat_bound", beat_ok, "n <= 64, 1000 points each"))

    grid = np.linspace(0.0, 16.0, 1601)
    safe = np.where(grid == 0.0, 1.0, grid)
    limit = np.where(grid == 0.0, 1.0, np.sin(safe) / safe) - np.cos(grid)
    sups = {
        n: float(np.max(np.abs(asymptotics.scaled_symbol(n, grid) - limit)))
        for n in (256, 1024, 4096)
    }
    conv_ok = sups[256] <= 0.05 * tol_scale and sups[4096] <= 0.005 * tol_scale
    checks.append(
        CheckResult(
            "scaled_symbol_convergence",
            conv_ok,
            ", ".join(f"n={n}: sup {v:.4g}" for n, v in sups.items()),
        )
    )

    alphas = np.linspace(0.0, 16.0, 1601)
    direct = (
        (1.0 - np.cos(alphas / 16.0))
        * clenshaw_eval(asymptotics.epanechnikov_series(16), np.cos(alphas / 16.0))
        / 32.0
    )
    two_path = float(np.max(np.abs(asymptotics.scaled_symbol(16, alphas) - direct)))
    checks.append(
        CheckResult("series_vs_trig_form", two_path <= 1e-9 * tol_scale, f"sup {two_path:.3g}")
    )

    split_ok = True
    for n in (64, 256):
        theta = np.linspace(16.0 / n, math.pi, 20 * n)
        x = np.cos(theta)
        vals = np.abs((1.0 - x) * clenshaw_eval(asymptotics.epanechnikov_series(n), x)) / (2.0 * n)
        split_ok &= float(np.max(vals)) <= mu.mu + 0.02
    checks.append(CheckResult("interval_split_bound", split_ok, "n in {64, 256}"))

    reported = {n: asymptotics.epanechnikov_ratio(n) for n in (16, 64)}
    checks.append(
        CheckResult(
            "epanechnikov_ratio_reported",
            True,
            ", ".join(f"n={n}: {v:.6f}" for n, v in reported.items()),
        )
    )
    return checks


_RUNNERS = {
    "extremal": run_extremal_suite,
    "multiplier": run_multiplier_suite,
    "asymptotics": run_asymptotics_suite,
}


def run_suite(name: str, n_max: int = 64, tol_scale: float = 1.0) -> list[CheckResult]:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return _RUNNERS[name](n_max=n_max, tol_scale=tol_scale)


def run_suites(names, n_max: int = 64, tol_scale: float = 1.0) -> dict:
    summary: dict = {"n_max": n_max, "tol_scale": tol_scale, "suites": {}, "all_passed": True}
    for name in names:
        checks = run_suite(name, n_max=n_max, tol_scale=tol_scale)
        passed = all(c.passed for c in checks)
        summary["suites"][name] = {
            "passed": bool(passed),
            "checks": [
                {"name": c.name, "passed": bool(c.passed), "detail": c.detail} for c in checks
            ],
        }
        summary["all_passed"] = summary["all_passed"] and passed
    return summary

"""Verification suites: the shared execution layer behind the service and CLI.

Each suite runs a themed batch of checks and returns a plain dict report:

    {"schema_version", "command", "seed", "passed", "hard_failures",
     "soft_failures", "checks": [...], "tables": [...]}

Hard checks correspond to proven statements (a failure is an implementation
bug and fails the run); soft checks cover unproven comparisons and are
reported without affecting the exit status. All randomness is derived from
the seed, so reports are byte-identical across reruns.

The environment variable GAUSSBALANCE_THREADS caps the worker pool used for
independent per-level computations (default 1, fully sequential).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import balancing, bounds, counterexample, lattice, planar_cones, planar_regions
from .errors import DomainError, GaussBalanceError
from .gaussian_core import GaussScalarTable, inv_psi
from .report import SCHEMA

COMMANDS = (
    "verify-cone",
    "verify-planar",
    "verify-claims",
    "verify-lattice",
    "verify-balancing",
    "counterexample",
    "bounds-table",
    "all",
)

_HARD_P_DEFAULT = (0.1, 0.25, 0.4, 0.499)
_SOFT_P_DEFAULT = (0.6, 0.75, 0.9)


@dataclass(frozen=True)
class SuiteOptions:
    p_list: tuple[float, ...] | None = None
    grid: int = 200
    samples: int = 200
    seed: int = 0
    tolerances: dict[str, float] = field(default_factory=dict)

    def tol(self, key: str, default: float) -> float:
        return float(self.tolerances.get(key, default))


def max_workers() -> int:
    raw = os.environ.get("GAUSSBALANCE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _parallel_map(fn, items):
    workers = max_workers()
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _check(name: str, kind: str, passed: bool, **detail) -> dict:
    return {"name": name, "kind": kind, "passed": bool(passed), "detail": detail}


def _finish(command: str, opts: SuiteOptions, checks: list[dict], tables: list[dict]) -> dict:
    hard_failures = sum(1 for c in checks if c["kind"] == "hard" and not c["passed"])
    soft_failures = sum(1 for c in checks if c["kind"] == "soft" and not c["passed"])
    return {
        "schema_version": SCHEMA,
        "command": command,
        "seed": opts.seed,
        "passed": hard_failures == 0,
        "hard_failures": hard_failures,
        "soft_failures": soft_failures,
        "checks": checks,
        "tables": tables,
    }


# ---------------------------------------------------------------------------
# verify-cone
# ---------------------------------------------------------------------------


def run_cone(opts: SuiteOptions) -> dict:
    p_list = opts.p_list or (_HARD_P_DEFAULT + _SOFT_P_DEFAULT)
    endpoint_tol = opts.tol("endpoint", 1e-2)
    quad_tol = opts.tol("quad", 1e-9)

    def sweep(p: float):
        try:
            return planar_cones.sweep_verify(p, theta_points=opts.grid, tol=quad_tol), None
        except GaussBalanceError as exc:
            return None, str(exc)

    checks: list[dict] = []
    rows = []
    for p, (report, err) in zip(p_list, _parallel_map(sweep, p_list)):
        if err is not None:
            checks.append(_check(f"cone-sweep p={p}", "hard", False, error=err))
            continue
        ends_ok = (
            report.endpoint_gap_low <= endpoint_tol
            and report.endpoint_gap_high <= endpoint_tol
        )
        if p <= 0.5:
            checks.append(
                _check(
                    f"cone-sweep p={p}", "hard", report.max_gap < 0.0 and ends_ok,
                    max_gap=report.max_gap, argmax_theta=report.argmax_theta,
                    endpoint_gap_low=report.endpoint_gap_low,
                    endpoint_gap_high=report.endpoint_gap_high,
                )
            )
        else:
            checks.append(
                _check(
                    f"cone-dilation-conjecture p={p}", "soft",
                    bool(report.conjecture_ok) and ends_ok,
                    max_full_measure=report.max_full_measure, q=report.q,
                )
            )
        rows.append([
            p, report.max_gap, report.argmax_theta,
            report.endpoint_gap_low, report.endpoint_gap_high,
            report.max_full_measure, report.q,
        ])
    tables = [{
        "name": "cone_sweep",
        "columns": ["p", "max_gap", "argmax_theta", "endpoint_gap_low",
                    "endpoint_gap_high", "max_full_measure", "q"],
        "rows": rows,
    }]
    return _finish("verify-cone", opts, checks, tables)


# ---------------------------------------------------------------------------
# verify-claims
# ---------------------------------------------------------------------------


def run_claims(opts: SuiteOptions) -> dict:
    p_list = opts.p_list or _HARD_P_DEFAULT
    sign_grid = max(1000, opts.grid)
    checks: list[dict] = []
    rows = []

    def analyze(p: float):
        report = planar_cones.find_critical_theta(p, grid=sign_grid)
        arm = planar_cones.check_critical_arm_bound(p, grid=sign_grid)
        return report, arm

    for p, (report, arm) in zip(p_list, _parallel_map(analyze, p_list)):
        checks.append(
            _check(
                f"critical-point p={p}", "hard",
                report.sign_changes == 1 and report.m_at_star < 0.5 * p and arm.ok,
                theta_star=report.theta_star, m_at_star=report.m_at_star,
                sign_changes=report.sign_changes, arm_margin=arm.margin,
                arm_bound_applicable=arm.applicable,
            )
        )
        rows.append([p, report.theta_star, report.m_at_star, report.sign_changes,
                     arm.margin, arm.applicable])

    # scalar (h, w) inequality, both forms, on a 1000-point level grid
    level_grid = [0.001 + (0.5 - 0.001) * i / 999 for i in range(1000)]
    quantile_violations = planar_cones.check_quantile_inequality(level_grid)
    checks.append(
        _check("quantile-inequality-sweep", "hard", not quantile_violations,
               grid_points=len(level_grid), violations=len(quantile_violations))
    )

    # critical-point convexity inequality on the admissible (p, x) grid
    convexity_violations = 0
    for p in level_grid:
        x_min = planar_cones.critical_x_lower_bound(p)
        hi = GaussScalarTable.from_p(p).w + 20.0
        xs = np.linspace(x_min, hi, 1001)[1:]
        convexity_violations += len(planar_cones.check_convexity_inequality(p, xs))
    checks.append(
        _check("convexity-inequality-sweep", "hard", convexity_violations == 0,
               grid="1000x1000", violations=convexity_violations)
    )

    # derivative formula versus central finite differences (spot check)
    rng = np.random.default_rng(opts.seed + 101)
    fd_count = max(5, min(50, opts.samples // 4))
    worst_rel = 0.0
    for p in (0.25, 0.5, 0.75):
        for _ in range(fd_count):
            theta = float(rng.uniform(0.05, 0.5 * math.pi - 0.05))
            closed = planar_cones.cone_half_measure_derivative(
                planar_cones.cone_state(p, theta)
            )
            fd = (
                planar_cones.cone_half_measure(p, theta + 1e-4, tol=1e-13)
                - planar_cones.cone_half_measure(p, theta - 1e-4, tol=1e-13)
            ) / 2e-4
            worst_rel = max(worst_rel, abs(closed - fd) / max(abs(closed), 1e-8))
    checks.append(
        _check("derivative-closed-form", "hard", worst_rel <= 1e-5,
               samples=3 * fd_count, worst_relative_error=worst_rel)
    )

    tables = [{
        "name": "critical_points",
        "columns": ["p", "theta_star", "m_at_star", "sign_changes", "arm_margin",
                    "arm_bound_applicable"],
        "rows": rows,
    }]
    return _finish("verify-claims", opts, checks, tables)


# ---------------------------------------------------------------------------
# verify-planar
# ---------------------------------------------------------------------------

_EHRHARD_SPECS = (
    ("cone", {"n": 3, "d": 10.0, "t": 2.0}),
    ("cone", {"n": 3, "d": 6.0, "t": 1.0}),
    ("cone", {"n": 3, "d": 4.0, "t": 0.5}),
    ("cone", {"n": 3, "d": 8.0, "t": 3.0}),
    ("cone", {"n": 3, "d": 12.0, "t": 1.5}),
    ("cone", {"n": 3, "d": 5.0, "t": 2.5}),
    ("box", {"lo": (-1.0, -1.0, -1.0), "hi": (1.0, 1.0, 1.0)}),
    ("box", {"lo": (-0.5, -2.0, -1.0), "hi": (1.5, 0.5, 2.0)}),
    ("box", {"lo": (-2.0, -0.3, -0.8), "hi": (0.4, 1.1, 0.8)}),
    ("box", {"lo": (-1.2, -1.2, 0.0), "hi": (1.2, 1.2, 2.4)}),
)


def _ehrhard_body(kind: str, params: dict):
    if kind == "cone":
        return planar_regions.ConeSection(**params)
    return planar_regions.BoxSection(**params)


def _ehrhard_reference(kind: str, params: dict) -> float:
    if kind == "cone":
        return counterexample.cone_measure(params["n"], params["d"], params["t"], tol=1e-10)
    return planar_regions.BoxSection(**params).total_measure()


def run_planar(opts: SuiteOptions) -> dict:
    p = (opts.p_list or (0.25,))[0]
    if not 0.0 < p <= 0.5:
        raise DomainError("verify-planar requires a level p <= 1/2")
    checks: list[dict] = []
    rng = np.random.default_rng(opts.seed + 202)

    # random hypograph property suite
    violations = 0
    vacuous = 0
    for _ in range(opts.samples):
        region = planar_regions.random_hypograph(rng, p)
        report = planar_regions.verify_slice_bound(p, region, tol=opts.tol("quad", 1e-9))
        if report.vacuous:
            vacuous += 1
        elif not report.ok:
            violations += 1
    checks.append(
        _check("hypograph-slice-bound", "hard", violations == 0,
               samples=opts.samples, violations=violations, vacuous=vacuous, p=p)
    )

    # Steiner symmetrization of random cones
    cone_count = min(100, max(20, opts.samples // 2))
    slice_bad = 0
    measure_bad = 0
    for _ in range(cone_count):
        cone = planar_regions.random_cone(rng)
        sym = planar_regions.steiner_symmetrize(cone)
        t0 = cone.knots[0][1]
        for x in np.linspace(t0 - 5.0, t0 - 1e-6, 100):
            line = planar_regions.SliceLine(float(x))
            if abs(
                planar_regions.slice_length(sym, line)
                - planar_regions.slice_length(cone, line)
            ) > 1e-9:
                slice_bad += 1
                break
        if planar_regions.gamma2_region(sym) < planar_regions.gamma2_region(cone) - 1e-8:
            measure_bad += 1
    checks.append(
        _check("steiner-symmetrization", "hard", slice_bad == 0 and measure_bad == 0,
               cones=cone_count, slice_violations=slice_bad,
               measure_violations=measure_bad)
    )

    # Ehrhard shadow consistency on the fixed body list
    measure_tol = opts.tol("measure", 1e-4)
    rows = []
    worst = 0.0
    concavity_bad = 0
    for kind, params in _EHRHARD_SPECS:
        body = _ehrhard_body(kind, params)
        region = planar_regions.ehrhard_symmetrize(body, 3)
        shadow = planar_regions.gamma2_region(region)
        reference = _ehrhard_reference(kind, params)
        err = abs(shadow - reference)
        worst = max(worst, err)
        concavity_bad += planar_regions.midpoint_concavity_violations(region, tol=1e-9)
        rows.append([kind, str(params), reference, shadow, err])
    checks.append(
        _check("ehrhard-consistency", "hard", worst <= measure_tol and concavity_bad == 0,
               specs=len(_EHRHARD_SPECS), worst_error=worst,
               concavity_violations=concavity_bad)
    )

    tables = [{
        "name": "ehrhard_shadow",
        "columns": ["kind", "params", "body_measure", "shadow_measure", "abs_error"],
        "rows": rows,
    }]
    return _finish("verify-planar", opts, checks, tables)


# ---------------------------------------------------------------------------
# verify-lattice
# ---------------------------------------------------------------------------


def run_lattice(opts: SuiteOptions) -> dict:
    checks: list[dict] = []
    rows = []
    slack = opts.tol("slack", 3e-2)
    z2 = lattice.LatticeBasis(basis=np.eye(2))
    z3 = lattice.LatticeBasis(basis=np.eye(3))

    named = [
        ("mu(Z2, B1)", z2, balancing.LpBall(2, 1.0), 1.0, 2e-2, 48),
        ("mu(Z2, B2)", z2, balancing.LpBall(2, 2.0), math.sqrt(2.0) / 2.0, 2e-2, 48),
        ("mu(Z2, Binf)", z2, balancing.LpBall(2, math.inf), 0.5, 2e-2, 48),
        ("mu(Z3, B2)", z3, balancing.LpBall(3, 2.0), math.sqrt(3.0) / 2.0, 5e-2, 20),
        ("mu(Z2, slab 0.3)", z2, balancing.Slab([0.0, 1.0], 0.3), 1.0 / 0.6, 3e-2, 48),
        ("mu(Z2, slab 0.67449)", z2, balancing.Slab([0.0, 1.0], 0.67449),
         1.0 / (2.0 * 0.67449), 3e-2, 48),
    ]
    for name, L, body, expected, tol, grid in named:
        mu = lattice.covering_radius(L, body, grid=grid)
        checks.append(
            _check(name, "hard", abs(mu - expected) <= tol,
                   computed=mu, expected=expected, tolerance=tol)
        )
        rows.append([name, mu, expected, abs(mu - expected)])

    certs = [
        ("alpha(Z2, B2, B2)", z2, balancing.LpBall(2, 2.0), balancing.LpBall(2, 2.0),
         math.sqrt(2.0) / 2.0, 2e-2, 48),
        ("alpha(Z2, B2, slab@0.25)", z2, balancing.LpBall(2, 2.0),
         balancing.Slab([0.0, 1.0], inv_psi(0.25)), 1.0 / (2.0 * inv_psi(0.25)), slack, 48),
        ("alpha(Z3, B2, B2)", z3, balancing.LpBall(3, 2.0), balancing.LpBall(3, 2.0),
         math.sqrt(3.0) / 2.0, 5e-2, 18),
    ]
    for name, L, U, V, expected, tol, grid in certs:
        cert = lattice.alpha_certificate(L, U, V, grid=grid)
        checks.append(
            _check(name, "hard", abs(cert.ratio - expected) <= tol,
                   ratio=cert.ratio, lambda_n=cert.lambda_n, mu=cert.mu, expected=expected)
        )
        rows.append([name, cert.ratio, expected, abs(cert.ratio - expected)])

    # tensorization equality (soft; the monotonicity argument's mechanism)
    rng = np.random.default_rng(opts.seed + 303)
    tensor_cases = min(20, max(5, opts.samples // 10))
    tensor_fail = 0
    worst_gap = 0.0
    for _ in range(tensor_cases):
        if rng.uniform() < 0.5:
            L = lattice.LatticeBasis(basis=np.eye(1) * float(rng.uniform(0.5, 2.0)))
            body = balancing.Slab([1.0], float(rng.uniform(0.3, 1.0)))
        else:
            B = np.eye(2) + 0.25 * rng.standard_normal((2, 2))
            L = lattice.LatticeBasis(basis=B)
            body = (
                balancing.LpBall(2, 2.0)
                if rng.uniform() < 0.5
                else balancing.Slab(rng.standard_normal(2), float(rng.uniform(0.4, 1.0)))
            )
        report = lattice.tensor_extend(L, body, grid=20, tolerance=slack)
        worst_gap = max(worst_gap, abs(report.mu_extended - report.mu_base))
        if not report.ok:
            tensor_fail += 1
    checks.append(
        _check("tensorization-equality", "soft", tensor_fail == 0,
               cases=tensor_cases, failures=tensor_fail, worst_gap=worst_gap)
    )

    tables = [{
        "name": "lattice_values",
        "columns": ["name", "computed", "expected", "abs_error"],
        "rows": rows,
    }]
    return _finish("verify-lattice", opts, checks, tables)


# ---------------------------------------------------------------------------
# verify-balancing
# ---------------------------------------------------------------------------


def run_balancing(opts: SuiteOptions) -> dict:
    checks: list[dict] = []
    slack = opts.tol("slack", 3e-2)

    named = [
        ("cover<=balance (e1,e2 | B2)", np.eye(2), balancing.LpBall(2, 2.0), 48),
        ("cover<=balance (e1,e2 | Binf)", np.eye(2), balancing.LpBall(2, math.inf), 48),
        ("cover<=balance (e1,e2,e3 | Binf)", np.eye(3), balancing.LpBall(3, math.inf), 14),
    ]
    for name, vecs, body, grid in named:
        report = lattice.verify_alpha_le_beta(vecs, body, grid=grid, slack=slack)
        checks.append(
            _check(name, "hard", report.ok, mu=report.mu, beta_sub=report.beta_sub)
        )

    rng = np.random.default_rng(opts.seed + 404)
    random_cases = opts.samples
    failures = 0
    for _ in range(random_cases):
        while True:
            vecs = rng.standard_normal((2, 2))
            vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
            if abs(np.linalg.det(vecs)) >= 0.3:
                break
        kind = int(rng.integers(0, 3))
        if kind == 0:
            body = balancing.LpBall(2, 2.0)
        elif kind == 1:
            body = balancing.LpBall(2, math.inf)
        else:
            body = balancing.Slab(rng.standard_normal(2), float(rng.uniform(0.3, 1.2)))
        report = lattice.verify_alpha_le_beta(vecs, body, grid=32, slack=slack)
        if not report.ok:
            failures += 1
    checks.append(
        _check("cover<=balance random 2-D", "hard", failures == 0,
               cases=random_cases, failures=failures)
    )

    # dyadic decomposition over full grids up to depth 6
    U = np.eye(2)
    body = balancing.LpBall(2, 2.0)
    bound = balancing.beta_subset(U, body)
    identity_bad = 0
    gauge_bad = 0
    points = 0
    for k in range(1, 7):
        m = 1 << k
        for i in range(m + 1):
            for j in range(m + 1):
                y = np.array([i, j], dtype=float) / m
                z0, v = balancing.dyadic_decompose(U, body, y, k, bound=bound)
                points += 1
                if not np.allclose(z0 + v, y, atol=1e-12):
                    identity_bad += 1
                if body.gauge(v) > bound * (1.0 - 2.0**-k) + 1e-9:
                    gauge_bad += 1
    checks.append(
        _check("dyadic-decomposition", "hard", identity_bad == 0 and gauge_bad == 0,
               points=points, identity_violations=identity_bad,
               gauge_violations=gauge_bad)
    )
    return _finish("verify-balancing", opts, checks, [])


# ---------------------------------------------------------------------------
# counterexample
# ---------------------------------------------------------------------------


def run_counterexample(opts: SuiteOptions) -> dict:
    p = (opts.p_list or (0.25,))[0]
    s_list = (1e-1, 1e-2, 1e-3)
    checks: list[dict] = []
    rows = []
    try:
        instances = counterexample.build_counterexample(p, s_list)
    except GaussBalanceError as exc:
        checks.append(_check("counterexample-construction", "hard", False, error=str(exc)))
        return _finish("counterexample", opts, checks, [])

    checks.append(
        _check("counterexample-construction", "hard", True,
               p=p, t=instances[0].t, d=instances[0].d, delta=instances[0].delta)
    )
    measures_ok = all(inst.gamma_shifted >= p for inst in instances)
    checks.append(
        _check("shifted-measure-above-level", "hard", measures_ok,
               measures=[inst.gamma_shifted for inst in instances])
    )
    balance_ok = all(inst.balance_value >= inst.beta_lb - 1e-6 for inst in instances)
    checks.append(
        _check("balance-certificates", "hard", balance_ok,
               values=[inst.balance_value for inst in instances],
               lower_bounds=[inst.beta_lb for inst in instances])
    )
    ratio_ok = True
    for a, b in zip(instances, instances[1:]):
        expected = a.s / b.s
        if abs(b.beta_lb / a.beta_lb - expected) > 1e-12 * expected:
            ratio_ok = False
    checks.append(_check("blowup-ratio-exact", "hard", ratio_ok))

    for inst in instances:
        row = inst.to_dict()
        row["p"] = p
        rows.append([row["p"], row["t"], row["d"], row["s"], row["gamma"],
                     row["delta"], row["beta_lb"]])
    tables = [{
        "name": "counterexample_instances",
        "columns": ["p", "t", "d", "s", "gamma", "delta", "beta_lb"],
        "rows": rows,
    }]
    return _finish("counterexample", opts, checks, tables)


# ---------------------------------------------------------------------------
# bounds-table
# ---------------------------------------------------------------------------


def run_bounds(opts: SuiteOptions) -> dict:
    p_list = opts.p_list or (0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9)
    checks: list[dict] = []

    profile_rows = []
    for p in p_list:
        prof = bounds.bound_profile(p, n_list=(2, 40))
        profile_rows.append([p, prof.f, prof.f_alpha, prof.f_beta, prof.q])

    # identity and ratio checks on a fine grid
    fine = np.linspace(0.001, 0.4999, 1000)
    eq_ok = all(bounds.f_covering(float(p)) == bounds.f_alpha(float(p)) for p in fine)
    target = 10.0 * inv_psi(0.5)
    ratio_ok = all(
        abs(bounds.f_beta(float(p)) / bounds.f_alpha(float(p)) - target) <= 1e-12
        for p in fine
    )
    full = np.linspace(0.001, 0.999, 1000)
    mono_ok = True
    for fn in (bounds.f_covering, bounds.f_alpha, bounds.f_beta):
        vals = [fn(float(p)) for p in full]
        if any(b > a + 1e-12 for a, b in zip(vals, vals[1:])):
            mono_ok = False
    checks.append(_check("f-equals-f_alpha", "hard", eq_ok, grid_points=len(fine)))
    checks.append(_check("f_beta-over-f_alpha-ratio", "hard", ratio_ok,
                         target=target))
    checks.append(_check("bounds-monotone", "hard", mono_ok, grid_points=len(full)))

    c_half = 1.0 / (2.0 * inv_psi(0.5))
    f40 = bounds.bound_profile(0.75, n_list=(40,)).f_n[40]
    checks.append(
        _check("f_n-limit-at-40", "hard", abs(f40 - c_half) <= 1e-6,
               f_40=f40, limit=c_half)
    )

    ratio_rows = []
    band_ok = True
    lower_ok = True
    for n in (100, 10_000, 1_000_000):
        inf_val, argmin = bounds.ratio_infimum(n, grid=max(200, opts.grid))
        norm = inf_val / math.sqrt(math.log(n))
        ratio_rows.append([n, inf_val, argmin, norm])
        if not 0.2 <= norm <= 5.0:
            band_ok = False
        if 2.0 * inf_val < math.sqrt(math.log(n)):
            lower_ok = False
    checks.append(_check("ratio-infimum-band", "hard", band_ok))
    checks.append(_check("ratio-infimum-lower-form", "hard", lower_ok))

    ball_rows = []
    floor_ok = True
    log_term = abs(math.log(0.01))
    for row in bounds.limit_lower_bounds(0.99, (10, 100, 1000)):
        floor = 1.0 - 2.0 * math.sqrt(log_term) / math.sqrt(row.n)
        ball_rows.append([row.n, row.radius, row.beta_ratio, row.alpha_ratio, floor])
        if row.beta_ratio < floor:
            floor_ok = False
    checks.append(_check("chi-ratio-floor", "hard", floor_ok, p=0.99))

    tables = [
        {"name": "bound_profile",
         "columns": ["p", "f", "f_alpha", "f_beta", "q"], "rows": profile_rows},
        {"name": "ratio_infimum",
         "columns": ["n", "inf_value", "argmin_p", "inf_over_sqrt_log_n"],
         "rows": ratio_rows},
        {"name": "ball_ratios",
         "columns": ["n", "radius", "beta_ratio", "alpha_ratio", "floor"],
         "rows": ball_rows},
    ]
    return _finish("bounds-table", opts, checks, tables)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_RUNNERS = {
    "verify-cone": run_cone,
    "verify-planar": run_planar,
    "verify-claims": run_claims,
    "verify-lattice": run_lattice,
    "verify-balancing": run_balancing,
    "counterexample": run_counterexample,
    "bounds-table": run_bounds,
}


def run_all(opts: SuiteOptions) -> dict:
    checks: list[dict] = []
    tables: list[dict] = []
    for command in COMMANDS[:-1]:
        sub = _RUNNERS[command](opts)
        for check in sub["checks"]:
            renamed = dict(check)
            renamed["name"] = f"{command}/{check['name']}"
            checks.append(renamed)
        for table in sub["tables"]:
            renamed = dict(table)
            renamed["name"] = f"{command.replace('-', '_')}_{table['name']}"
            tables.append(renamed)
    report = _finish("all", opts, checks, tables)
    return report


def run_command(command: str, opts: SuiteOptions) -> dict:
    if command == "all":
        return run_all(opts)
    if command not in _RUNNERS:
        raise DomainError(f"unknown command {command!r}")
    return _RUNNERS[command](opts)

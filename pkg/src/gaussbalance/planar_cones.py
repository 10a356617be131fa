"""A one-parameter family of symmetric planar cones and its Gaussian measure.

For a measure level p with scalars (h, w), consider the cone C(theta) in the
plane that is symmetric about the x-axis, opens leftward with half-angle
theta, and whose two boundary rays pass through (-w, h) and (-w, -h). Its
apex sits at (y, 0) with y = h/tan(theta) - w. As theta runs over
(0, pi/2) the family interpolates between the horizontal slab of half-width
h and the half-plane {x <= -w}, both of measure p.

The central object is

    m(theta) = gaussian measure of C(theta) intersected with {y >= 0},

computed by integrating pdf(x) * (cdf(slice_top(x)) - 1/2) over the apex
half-line, together with the closed form for m'(theta) whose sign equals
sign(lambda - w_y), where lambda = pdf(u)/cdf(u) is the mean of a standard
normal conditioned to exceed -u.

For p <= 1/2 the measure stays strictly below p/2 on the open interval and m
has a unique interior critical point (a minimum); the module locates that
point, counts sign changes, and sweeps the two scalar inequalities that the
convexity argument at critical points reduces to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._quad import integrate_panels
from .errors import DomainError, VerificationError
from .gaussian_core import GaussScalarTable, cdf, inv_cdf, pdf

THETA_MIN = 1e-3
CLIP = 9.0


@dataclass(frozen=True)
class ConeState:
    """Full geometric state of the cone at a given (p, theta)."""

    p: float
    theta: float
    h: float
    w: float
    y: float            # apex abscissa
    y_prime: float      # distance from apex to (-w, h)
    h_y: float          # y * sin(theta)
    w_y: float          # h * sin(theta) + w * cos(theta)
    u: float            # y * cos(theta)
    lambda_theta: float  # pdf(u) / cdf(u)
    theta0: float | None  # angle putting the apex at the origin (p < 1/2)


def cone_state(p: float, theta: float) -> ConeState:
    if not 0.0 < p < 1.0:
        raise DomainError(f"cone_state requires 0 < p < 1, got {p}")
    if not 0.0 < theta < 0.5 * math.pi:
        raise DomainError(f"cone_state requires 0 < theta < pi/2, got {theta}")
    tab = GaussScalarTable.from_p(p)
    h, w = tab.h, tab.w
    s, c = math.sin(theta), math.cos(theta)
    y = h / math.tan(theta) - w
    u = y * c
    return ConeState(
        p=p,
        theta=theta,
        h=h,
        w=w,
        y=y,
        y_prime=h / s,
        h_y=y * s,
        w_y=h * s + w * c,
        u=u,
        lambda_theta=pdf(u) / cdf(u),
        theta0=math.atan2(h, w) if p <= 0.5 else None,
    )


def cone_half_measure(p: float, theta: float, tol: float = 1e-9) -> float:
    """Measure of the upper half of the cone, m(theta).

    The vertical slice above the axis at abscissa x <= y is
    [0, (y - x) tan(theta)], so

        m(theta) = int_{-inf}^{y} pdf(x) (cdf((y - x) tan theta) - 1/2) dx,

    truncated at x = -CLIP (mass beyond is < 1e-17).
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"cone_half_measure requires 0 < p < 1, got {p}")
    if not 0.0 < theta < 0.5 * math.pi:
        raise DomainError(f"cone_half_measure requires theta in (0, pi/2), got {theta}")
    t = math.tan(theta)
    y = inv_cdf(p) + GaussScalarTable.from_p(p).h / t  # y = h/tan - w with -w = inv_cdf(p)
    hi = min(y, CLIP)
    if hi <= -CLIP:
        return 0.0

    def integrand(x: float) -> float:
        return pdf(x) * (cdf((y - x) * t) - 0.5)

    # For steep cones the factor cdf((y - x) tan(theta)) transitions in a
    # layer of width O(1/tan) below x = y; seed breakpoints that isolate it
    # so panel refinement cannot terminate on accidental agreement.
    breaks = [-CLIP, hi]
    for k in (1.0, 3.0, 6.0, 12.0, 24.0, 48.0):
        xk = y - k / t
        if -CLIP < xk < hi:
            breaks.append(xk)
    return integrate_panels(integrand, breaks, tol=tol)


def cone_half_measure_derivative(state: ConeState) -> float:
    """Closed form for m'(theta); sign equals sign(lambda_theta - w_y)."""
    return cdf(state.u) * pdf(state.h_y) * (state.lambda_theta - state.w_y)


def _theta_grid(points: int) -> list[float]:
    lo, hi = THETA_MIN, 0.5 * math.pi - THETA_MIN
    if points < 2:
        return [lo]
    step = (hi - lo) / (points - 1)
    return [lo + i * step for i in range(points)]


@dataclass(frozen=True)
class CriticalPointReport:
    theta_star: float
    m_at_star: float
    sign_changes: int


def find_critical_theta(p: float, grid: int = 1000) -> CriticalPointReport:
    """Locate the interior critical point of m for p <= 1/2.

    Counts sign changes of m' on the grid (there must be exactly one) and
    bisects the bracketing interval down to width 1e-10.
    """
    if not 0.0 < p <= 0.5:
        raise DomainError(f"find_critical_theta requires 0 < p <= 1/2, got {p}")
    thetas = _theta_grid(grid)
    signs = [math.copysign(1.0, cone_half_measure_derivative(cone_state(p, th))) for th in thetas]
    changes = [i for i in range(len(signs) - 1) if signs[i] != signs[i + 1]]
    if len(changes) != 1:
        raise VerificationError(
            f"expected exactly one sign change of m' for p={p}, found {len(changes)}"
        )
    lo, hi = thetas[changes[0]], thetas[changes[0] + 1]
    slo = signs[changes[0]]
    while hi - lo > 1e-10:
        mid = 0.5 * (lo + hi)
        sm = math.copysign(1.0, cone_half_measure_derivative(cone_state(p, mid)))
        if sm == slo:
            lo = mid
        else:
            hi = mid
    theta_star = 0.5 * (lo + hi)
    m_star = cone_half_measure(p, theta_star)
    if not m_star < 0.5 * p:
        raise VerificationError(f"m(theta*)={m_star} is not below p/2 for p={p}")
    return CriticalPointReport(theta_star=theta_star, m_at_star=m_star, sign_changes=len(changes))


def convexity_gap(p: float, x: float) -> float:
    """Gap of the critical-point convexity inequality at abscissa offset x.

    With scalars (h, w) of level p and x = y + w > w, the inequality reads

        (h^2 + w x)(x^3 + 2 x h^2 - w h^2) > h^2 (x - w);

    this returns LHS - RHS.
    """
    tab = GaussScalarTable.from_p(p)
    h2 = tab.h * tab.h
    return (h2 + tab.w * x) * (x**3 + 2.0 * x * h2 - tab.w * h2) - h2 * (x - tab.w)


def critical_x_lower_bound(p: float) -> float:
    """Least abscissa offset compatible with a critical point.

    At any interior critical point of m the squared arm length satisfies
    x^2 + h^2 = (y')^2 > 2/pi, so x >= sqrt(max(0, 2/pi - h^2)); the
    inequality sweep is guaranteed only on [that bound, infinity)."""
    tab = GaussScalarTable.from_p(p)
    return max(tab.w, math.sqrt(max(0.0, 2.0 / math.pi - tab.h * tab.h)))


def check_convexity_inequality(p: float, x_grid) -> list[tuple[float, float]]:
    """Evaluate the convexity gap on x_grid; return the (x, gap) entries <= 0."""
    if not 0.0 < p <= 0.5:
        raise DomainError(f"check_convexity_inequality requires 0 < p <= 1/2, got {p}")
    tab = GaussScalarTable.from_p(p)
    xs = np.asarray(x_grid, dtype=float)
    if xs.size and float(np.min(xs)) <= tab.w:
        raise DomainError(f"x grid must satisfy x > w={tab.w}")
    h2 = tab.h * tab.h
    gaps = (h2 + tab.w * xs) * (xs**3 + 2.0 * xs * h2 - tab.w * h2) - h2 * (xs - tab.w)
    bad = gaps <= 0.0
    return [(float(x), float(g)) for x, g in zip(xs[bad], gaps[bad])]


@dataclass(frozen=True)
class ArmBoundReport:
    """Outcome of the critical-arm bound (y')^2 > 2/pi at the critical angle.

    The bound is a statement about critical points with the apex strictly
    right of the origin (y > 0, i.e. theta* < theta0); when the minimum
    falls in the convex branch (y <= 0) the bound is vacuous there and
    uniqueness rests on convexity instead.
    """

    theta_star: float
    margin: float
    applicable: bool
    ok: bool


def check_critical_arm_bound(p: float, grid: int = 1000) -> ArmBoundReport:
    report = find_critical_theta(p, grid=grid)
    state = cone_state(p, report.theta_star)
    margin = state.y_prime**2 - 2.0 / math.pi
    applicable = state.y > 0.0
    return ArmBoundReport(
        theta_star=report.theta_star,
        margin=margin,
        applicable=applicable,
        ok=(margin > 0.0) if applicable else True,
    )


def check_quantile_inequality(p_grid: list[float]) -> list[tuple[float, float, float]]:
    """Sweep the two scalar forms of the (h, w) inequality.

    Form A: (h^2 + w^2)(2/pi + h^2) >= h^2.
    Form B: h^2 + w^2 + (7/11) w^2/h^2 >= 4/11 (the sharper intermediate).
    Returns (p, gap_a, gap_b) for every p violating either form.
    """
    violations = []
    for p in p_grid:
        if not 0.0 < p <= 0.5:
            raise DomainError(f"check_quantile_inequality requires 0 < p <= 1/2, got {p}")
        tab = GaussScalarTable.from_p(p)
        h2, w2 = tab.h * tab.h, tab.w * tab.w
        gap_a = (h2 + w2) * (2.0 / math.pi + h2) - h2
        gap_b = h2 + w2 + (7.0 / 11.0) * w2 / h2 - 4.0 / 11.0
        if gap_a < 0.0 or gap_b < 0.0:
            violations.append((p, gap_a, gap_b))
    return violations


@dataclass(frozen=True)
class SweepReport:
    p: float
    theta_points: int
    max_gap: float                  # max over grid of m(theta) - p/2
    argmax_theta: float
    endpoint_gap_low: float         # |m - p/2| at theta = 2e-3
    endpoint_gap_high: float        # |m - p/2| at theta = pi/2 - 2e-3
    max_full_measure: float | None  # max of 2 m(theta), only for p > 1/2
    q: float | None                 # cdf(sqrt(2) inv_cdf(p)), only for p > 1/2
    conjecture_ok: bool | None      # 2 m <= q on the grid, only for p > 1/2


def sweep_verify(p: float, theta_points: int = 200, tol: float = 1e-9) -> SweepReport:
    """Sweep m over the clipped theta grid.

    For p <= 1/2 this asserts max(m - p/2) < 0 (a proven statement; failure
    raises VerificationError). For p > 1/2 the full-cone measure 2m is
    compared against q = cdf(sqrt(2) inv_cdf(p)) and reported only, since
    that comparison is an unproven conjecture.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"sweep_verify requires 0 < p < 1, got {p}")
    best_gap = -math.inf
    best_theta = THETA_MIN
    for theta in _theta_grid(theta_points):
        gap = cone_half_measure(p, theta, tol=tol) - 0.5 * p
        if gap > best_gap:
            best_gap, best_theta = gap, theta
    lo_gap = abs(cone_half_measure(p, 2e-3, tol=tol) - 0.5 * p)
    hi_gap = abs(cone_half_measure(p, 0.5 * math.pi - 2e-3, tol=tol) - 0.5 * p)
    if p <= 0.5:
        if best_gap >= 0.0:
            raise VerificationError(
                f"m(theta) reached p/2 for p={p} at theta={best_theta} (gap={best_gap})"
            )
        return SweepReport(p, theta_points, best_gap, best_theta, lo_gap, hi_gap, None, None, None)
    q = cdf(math.sqrt(2.0) * inv_cdf(p))
    max_full = 2.0 * (best_gap + 0.5 * p)
    return SweepReport(
        p, theta_points, best_gap, best_theta, lo_gap, hi_gap, max_full, q, max_full <= q
    )

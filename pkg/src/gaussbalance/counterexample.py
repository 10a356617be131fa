"""Certified blow-up of the balancing constant for non-symmetric bodies.

At any fixed measure level p < 1/2, a tall finite cone shifted slightly
below the origin keeps measure above p and still admits a lattice covering
certificate (it contains a translate of a large ball), yet the tuple
{e_1, c e_2} balances arbitrarily badly against it: every signed sum lands
in the four-point set P0 at distance delta from the unshifted cone, so the
gauge of each is at least delta/s and the balancing value blows up like 1/s
as the shift s shrinks. Dimension 2 is certified exactly; the measure
computation is kept general for n <= 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._quad import integrate
from .balancing import ShiftedCone, min_sign_balance
from .errors import DomainError
from .gaussian_core import ball_measure, pdf, psi

_Z_MAX = 9.0


def cone_measure(n: int, d: float, t: float, tol: float = 1e-8) -> float:
    """Gaussian measure of the cone of height d and aperture t in R^n.

    Integrates pdf(z) * ball_measure(n-1, t z) over the axis; d = inf is
    allowed (truncated at z = 9, beyond which the mass is < 1e-18).
    """
    if n < 2 or n > 6:
        raise DomainError(f"cone_measure requires 2 <= n <= 6, got {n}")
    if t <= 0.0 or d < 0.0:
        raise DomainError("cone_measure requires t > 0 and d >= 0")
    hi = min(d, _Z_MAX)
    if hi <= 0.0:
        return 0.0
    return integrate(lambda z: pdf(z) * ball_measure(n - 1, t * z), 0.0, hi, tol=tol)


def shifted_cone_measure(d: float, t: float, s: float, tol: float = 1e-8) -> float:
    """Planar measure of the cone shifted down by s (exact 2-D integral)."""
    lo, hi = -s, min(d - s, _Z_MAX)
    if hi <= lo:
        return 0.0
    return integrate(lambda y: pdf(y) * psi(t * (y + s)), lo, hi, tol=tol)


def dist_to_cone(point, d: float, t: float) -> float:
    """Exact Euclidean distance from a planar point to the cone (triangle
    with apex 0 and top corners (+-t d, d)); case analysis over the three
    boundary segments."""
    x, y = float(point[0]), float(point[1])
    if 0.0 <= y <= d and abs(x) <= t * y:
        return 0.0
    apex = np.zeros(2)
    top_r = np.array([t * d, d])
    top_l = np.array([-t * d, d])
    q = np.array([x, y])
    return min(
        _dist_segment(q, apex, top_r),
        _dist_segment(q, apex, top_l),
        _dist_segment(q, top_l, top_r),
    )


def _dist_segment(q: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    ab = b - a
    lam = float(np.dot(q - a, ab) / np.dot(ab, ab))
    lam = min(1.0, max(0.0, lam))
    return float(np.linalg.norm(q - (a + lam * ab)))


@dataclass(frozen=True)
class CounterexampleInstance:
    n: int
    t: float
    d: float
    s: float
    gamma: float           # measure of the unshifted cone
    gamma_shifted: float   # measure of the shifted cone (exact integral)
    delta: float           # dist(P0, cone)
    tuple_vectors: tuple[tuple[float, ...], ...]
    beta_lb: float         # delta / s
    balance_value: float   # certified min_sign_balance against the shifted cone

    def to_dict(self) -> dict:
        return {
            "p": None,  # filled by the caller that knows the target level
            "t": self.t,
            "d": self.d,
            "s": self.s,
            "gamma": self.gamma,
            "delta": self.delta,
            "beta_lb": self.beta_lb,
        }


def _solve_infinite_cone_aperture(target: float) -> float:
    """Aperture t with measure(infinite planar cone) = target; the apex cone
    measure is arctan(t)/pi, so this is tan(pi * target)."""
    if not 0.0 < target < 0.5:
        raise DomainError(f"infinite-cone measure must lie in (0, 1/2), got {target}")
    return math.tan(math.pi * target)


def build_counterexample(
    p: float,
    s_list: tuple[float, ...],
    margin: float = 0.02,
    certify_tol: float = 1e-6,
) -> list[CounterexampleInstance]:
    """Construct certified blow-up instances at level p for each shift s.

    The aperture is chosen so the infinite cone holds measure
    p + max(s)/2 + 2*margin, the height d so the finite cone keeps that
    measure (up to a vanishing tail) and contains a translate of 2 B_2^2
    (covering certificate). Each shift must satisfy s < delta/2; every
    instance carries the exact shifted measure and the enumerated balancing
    value against the shifted-cone gauge.
    """
    if not 0.0 < p < 0.5:
        raise DomainError(f"build_counterexample requires 0 < p < 1/2, got {p}")
    if not s_list or any(s <= 0.0 for s in s_list):
        raise DomainError("s_list must contain positive shifts")
    s_max = max(s_list)
    target = p + 0.5 * s_max + 2.0 * margin
    if target >= 0.5 - 1e-6:
        raise DomainError(
            f"infeasible parameters: p + s/2 + margins = {target} leaves no aperture headroom"
        )
    t = _solve_infinite_cone_aperture(target)

    ball_radius = 2.0  # translate of n B_2^n with n = 2
    z_center = ball_radius * math.sqrt(1.0 + t * t) / t
    d = max(6.0, z_center + ball_radius + 1.0)
    need = p + 0.5 * s_max + margin
    for _ in range(20):
        if cone_measure(2, d, t) >= need:
            break
        d *= 2.0
    gamma = cone_measure(2, d, t)
    if gamma < need:
        raise DomainError(f"could not reach cone measure {need} (got {gamma})")

    # Covering certificate: the ball of radius 2 about (0, z_center) sits
    # inside the cone; verified on a boundary sample.
    for k in range(64):
        ang = 2.0 * math.pi * k / 64
        bx = ball_radius * math.cos(ang)
        by = z_center + ball_radius * math.sin(ang)
        if not (0.0 <= by <= d and abs(bx) <= t * by):
            raise DomainError("ball translate escaped the cone; height selection bug")

    c = min(1.0, 0.4 / t)
    tuple_vectors = np.array([[1.0, 0.0], [0.0, c]])
    corner_points = [
        np.array([sx * 1.0, sy * c]) for sx in (1.0, -1.0) for sy in (1.0, -1.0)
    ]
    delta = min(dist_to_cone(q, d, t) for q in corner_points)
    if delta <= 0.0:
        raise DomainError("tuple corner set touches the cone; aperture too wide")

    instances = []
    for s in s_list:
        if not s < 0.5 * delta:
            raise DomainError(f"shift {s} is not below delta/2 = {0.5 * delta}")
        body = ShiftedCone(d=d, t=t, s=s, dim=2)
        if any(body.membership(q) for q in corner_points):
            raise DomainError("corner set intersects the shifted cone")
        gamma_s = shifted_cone_measure(d, t, s)
        if gamma_s < p:
            raise DomainError(f"shifted cone lost too much measure: {gamma_s} < {p}")
        target_lb = delta / s
        value, _ = min_sign_balance(tuple_vectors, body)
        if value < target_lb - certify_tol:
            raise DomainError(
                f"balancing certificate failed: {value} < {target_lb} - {certify_tol}"
            )
        instances.append(
            CounterexampleInstance(
                n=2, t=t, d=d, s=s, gamma=gamma, gamma_shifted=gamma_s,
                delta=delta,
                tuple_vectors=tuple(map(tuple, tuple_vectors.tolist())),
                beta_lb=target_lb, balance_value=value,
            )
        )
    return instances

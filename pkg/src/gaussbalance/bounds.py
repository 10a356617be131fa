"""Closed-form bound functions and asymptotic ratio sweeps.

All quantities are simple compositions of the one-dimensional Gaussian
primitives: the covering bound f(p) = (2 inv_psi(p))^{-1} (constant above
p = 1/2), the balancing bound 5 inv_psi(1/2) / inv_psi(p), the dilation
exponent q(p) = cdf(sqrt(2) inv_cdf(p)), the dimension-corrected family
f_n, the cube calibration t_{p,n} = inv_psi(p^{1/n}), and the ball-radius
ratios sqrt(n) / R_p(n) built from chi quantiles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, VerificationError
from .gaussian_core import cdf, chi_quantile, inv_cdf, inv_psi


def f_covering(p: float) -> float:
    """(2 inv_psi(p))^{-1} for p <= 1/2, constant (2 inv_psi(1/2))^{-1} above."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"f_covering requires 0 < p < 1, got {p}")
    return 1.0 / (2.0 * inv_psi(min(p, 0.5)))


def f_alpha(p: float) -> float:
    """Sharp covering bound for symmetric bodies; identical formula to f_covering."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"f_alpha requires 0 < p < 1, got {p}")
    return 1.0 / (2.0 * inv_psi(min(p, 0.5)))


def f_beta(p: float) -> float:
    """Balancing bound 5 inv_psi(1/2)/inv_psi(p) for p <= 1/2, else 5."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"f_beta requires 0 < p < 1, got {p}")
    if p > 0.5:
        return 5.0
    return 5.0 * inv_psi(0.5) / inv_psi(p)


@dataclass(frozen=True)
class BoundProfile:
    p: float
    f: float
    f_alpha: float
    f_beta: float
    q: float | None
    f_n: dict[int, float] = field(default_factory=dict)
    t_pn: dict[int, float] = field(default_factory=dict)
    r_ball: dict[int, float] = field(default_factory=dict)


def bound_profile(p: float, n_list: tuple[int, ...] = ()) -> BoundProfile:
    """All bound values at level p; the dimension-indexed maps q, f_n and
    r_ball are populated only for p > 1/2 where they are defined."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"bound_profile requires 0 < p < 1, got {p}")
    q = None
    f_n: dict[int, float] = {}
    r_ball: dict[int, float] = {}
    t_pn = {int(n): inv_psi(p ** (1.0 / n)) for n in n_list}
    if p > 0.5:
        z = inv_cdf(p)
        q = cdf(math.sqrt(2.0) * z)
        for n in n_list:
            p_n = cdf(2.0 ** (-0.5 * n) * z)
            f_n[int(n)] = 1.0 / (2.0 * inv_psi(p_n))
            r_ball[int(n)] = math.sqrt(n) / (2.0 * z)
    return BoundProfile(p=p, f=f_covering(p), f_alpha=f_alpha(p), f_beta=f_beta(p),
                        q=q, f_n=f_n, t_pn=t_pn, r_ball=r_ball)


def _slab_to_cube_ratio(p: float, n: int) -> float:
    return inv_psi(p ** (1.0 / n)) / (2.0 * inv_psi(p))


def ratio_infimum(n: int, grid: int = 400) -> tuple[float, float]:
    """Minimize inv_psi(p^{1/n}) / (2 inv_psi(p)) over p in (1e-8, 1/2].

    Log-spaced grid scan followed by golden-section refinement on the
    bracketing interval; returns (infimum, argmin p).
    """
    if n < 2:
        raise DomainError(f"ratio_infimum requires n >= 2, got {n}")
    lo, hi = math.log(1e-8), math.log(0.5)
    ps = [math.exp(lo + (hi - lo) * i / (grid - 1)) for i in range(grid)]
    vals = [_slab_to_cube_ratio(p, n) for p in ps]
    i = min(range(grid), key=vals.__getitem__)
    a = ps[max(0, i - 1)]
    b = ps[min(grid - 1, i + 1)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1, f2 = _slab_to_cube_ratio(x1, n), _slab_to_cube_ratio(x2, n)
    for _ in range(60):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = _slab_to_cube_ratio(x1, n)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = _slab_to_cube_ratio(x2, n)
    p_star = 0.5 * (a + b)
    return min(f1, f2, vals[i]), p_star


@dataclass(frozen=True)
class BallRatioRow:
    n: int
    radius: float          # R_p(n)
    beta_ratio: float      # sqrt(n) / R_p
    alpha_ratio: float     # sqrt(n) / (2 R_p)


def limit_lower_bounds(p: float, n_list: tuple[int, ...]) -> list[BallRatioRow]:
    """Per-dimension ratios sqrt(n)/R_p and sqrt(n)/(2 R_p).

    When n >= |ln(1-p)| the chi concentration bound guarantees
    sqrt(n)/R_p >= 1 - 2 sqrt(|ln(1-p)|) / sqrt(n); a violation is an
    implementation bug and raises.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"limit_lower_bounds requires 0 < p < 1, got {p}")
    log_term = abs(math.log(1.0 - p))
    rows = []
    for n in n_list:
        r = chi_quantile(int(n), p)
        beta_ratio = math.sqrt(n) / r
        if n >= log_term:
            floor = 1.0 - 2.0 * math.sqrt(log_term) / math.sqrt(n)
            if beta_ratio < floor - 1e-9:
                raise VerificationError(
                    f"chi concentration bound violated at n={n}, p={p}: "
                    f"{beta_ratio} < {floor}"
                )
        rows.append(BallRatioRow(n=int(n), radius=r, beta_ratio=beta_ratio,
                                 alpha_ratio=0.5 * beta_ratio))
    return rows

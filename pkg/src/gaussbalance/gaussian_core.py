"""One-dimensional Gaussian primitives and radial ball measures.

Conventions used throughout the package:

    pdf(x)       standard normal density
    cdf(x)       P(N <= x) for N ~ N(0, 1)
    psi(x)       measure of the symmetric interval [-x, x]
    inv_cdf(q)   quantile function
    inv_psi(p)   half-width of the symmetric interval of measure p

plus the radial measure of centered Euclidean balls in dimension n and its
inverse (the chi quantile). Everything is pure, stateless and scalar; callers
that need arrays loop or vectorize at their own level.

cdf is backed by the C library's erfc (absolute error well below the 1e-12
contract on [-8, 8]); the test suite validates it against an independent
Taylor/continued-fraction oracle. Inverses are bracketing bisections polished
by Newton steps, the regularized incomplete gamma uses the classical
series/continued-fraction pair switched at x = a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def pdf(x: float) -> float:
    """Standard normal density e^{-x^2/2} / sqrt(2 pi)."""
    return math.exp(-0.5 * x * x) / SQRT_TWO_PI


def cdf(x: float) -> float:
    """Standard normal distribution function."""
    return 0.5 * math.erfc(-x * _INV_SQRT2)


def sf(x: float) -> float:
    """Upper tail P(N > x); accurate for large x where 1 - cdf(x) cancels."""
    return 0.5 * math.erfc(x * _INV_SQRT2)


def psi(x: float) -> float:
    """Measure of [-x, x]; equals 2*cdf(x) - 1."""
    if x < 0:
        raise DomainError(f"psi requires x >= 0, got {x}")
    return math.erf(x * _INV_SQRT2)


def inv_cdf(q: float) -> float:
    """Quantile function; bisection bracket refined by Newton steps."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"inv_cdf requires 0 < q < 1, got {q}")
    lo, hi = -1.0, 1.0
    while cdf(lo) > q:
        lo *= 2.0
    while cdf(hi) < q:
        hi *= 2.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if cdf(mid) < q:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(3):
        d = pdf(x)
        if d < 1e-300:
            break
        step = (cdf(x) - q) / d
        if not math.isfinite(step):
            break
        x -= step
    return x


def inv_psi(p: float) -> float:
    """Half-width x >= 0 with psi(x) = p."""
    if not 0.0 <= p < 1.0:
        raise DomainError(f"inv_psi requires 0 <= p < 1, got {p}")
    if p == 0.0:
        return 0.0
    return inv_cdf(0.5 * (1.0 + p))


def tail_envelope(x: float) -> tuple[float, float]:
    """Two-sided envelope for the upper tail P(N > x).

    Returns (lower, upper) with

        lower = pdf(x)/x * (1 - 1/x^2),   upper = pdf(x)/x,

    which bracket the tail for every x > 1. The lower bound is negative for
    x < 1 and is returned as-is.
    """
    if x <= 0.0:
        raise DomainError(f"tail_envelope requires x > 0, got {x}")
    upper = pdf(x) / x
    lower = upper * (1.0 - 1.0 / (x * x))
    return lower, upper


def _lower_gamma_series(a: float, x: float) -> float:
    """Regularized lower incomplete gamma by power series (x <= a + 1)."""
    term = 1.0 / a
    total = term
    k = 0
    while True:
        k += 1
        term *= x / (a + k)
        total += term
        if abs(term) < abs(total) * 1e-16 or k > 10_000:
            break
    return total * math.exp(a * math.log(x) - x - math.lgamma(a))


def _upper_gamma_cf(a: float, x: float) -> float:
    """Regularized upper incomplete gamma by Lentz continued fraction."""
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b if b != 0.0 else 1.0 / tiny
    f = d
    for i in range(1, 10_000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return f * math.exp(a * math.log(x) - x - math.lgamma(a))


def reg_lower_gamma(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0."""
    if a <= 0.0:
        raise DomainError(f"reg_lower_gamma requires a > 0, got {a}")
    if x < 0.0:
        raise DomainError(f"reg_lower_gamma requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        return _lower_gamma_series(a, x)
    return 1.0 - _upper_gamma_cf(a, x)


def ball_measure(n: int, r: float) -> float:
    """Gaussian measure of the centered Euclidean ball of radius r in R^n.

    Equals P(n/2, r^2/2); reduces to psi(r) for n = 1 and 1 - e^{-r^2/2}
    for n = 2.
    """
    if n < 1:
        raise DomainError(f"ball_measure requires n >= 1, got {n}")
    if r < 0.0:
        raise DomainError(f"ball_measure requires r >= 0, got {r}")
    if r == 0.0:
        return 0.0
    return reg_lower_gamma(0.5 * n, 0.5 * r * r)


def chi_quantile(n: int, p: float) -> float:
    """Radius R with ball_measure(n, R) = p, i.e. P(|Z| <= R) = p."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"chi_quantile requires 0 < p < 1, got {p}")
    if n < 1:
        raise DomainError(f"chi_quantile requires n >= 1, got {n}")
    lo, hi = 0.0, math.sqrt(n) + 2.0
    while ball_measure(n, hi) < p:
        hi *= 2.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if ball_measure(n, mid) < p:
            lo = mid
        else:
            hi = mid
    r = 0.5 * (lo + hi)
    # Newton polish on P(n/2, r^2/2); derivative is the chi density.
    a = 0.5 * n
    for _ in range(3):
        dens = math.exp((n - 1) * math.log(r) - 0.5 * r * r - math.lgamma(a) - (a - 1) * math.log(2.0))
        if dens < 1e-300 or not math.isfinite(dens):
            break
        r -= (ball_measure(n, r) - p) / dens
    return r


@dataclass(frozen=True)
class GaussScalarTable:
    """The scalar pair (h, w) carried by a measure level p.

    h is the half-width of the symmetric interval of measure p, w the
    (signed) distance such that the left half-line (-inf, -w] has measure p;
    w > 0 iff p < 1/2, and w = 0 exactly at p = 1/2.
    """

    p: float
    h: float
    w: float

    @classmethod
    def from_p(cls, p: float) -> "GaussScalarTable":
        if not 0.0 < p < 1.0:
            raise DomainError(f"GaussScalarTable requires 0 < p < 1, got {p}")
        w = 0.0 if p == 0.5 else -inv_cdf(p)
        return cls(p=p, h=inv_psi(p), w=w)

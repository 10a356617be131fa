"""Planar convex hypographs, their Gaussian measure, and symmetrizations.

A hypograph region is the planar set {(x, y) : x <= t_y} for a concave
piecewise-linear boundary t given by finitely many knots, optionally extended
by rays at both ends (a missing ray means t = -inf outside the knot range,
i.e. the region is cut off). Concavity of t makes the region convex.

The module computes Euclidean slice lengths on vertical lines, Gaussian
measures by knot-aligned adaptive quadrature, Steiner symmetrization of
two-ray cones about the x-axis, and the two-dimensional shadow of
higher-dimensional bodies obtained by replacing each section with a left
half-line of equal Gaussian measure (Ehrhard symmetrization).
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

import numpy as np

from ._quad import integrate_panels
from .errors import DomainError
from .gaussian_core import ball_measure, cdf, inv_cdf, inv_psi, pdf

CLIP = 9.0
_CONCAVITY_TOL = 1e-9


@dataclass(frozen=True)
class HypographRegion:
    """Convex region {(x, y) : x <= t_y} with concave piecewise-linear t.

    knots: ((y, t), ...) with strictly increasing y.
    left_slope / right_slope: slopes of the extension rays below the first
        and above the last knot; None encodes t = -inf there (no region).
    clip: half-width of the square quadrature window.
    """

    knots: tuple[tuple[float, float], ...]
    left_slope: float | None = None
    right_slope: float | None = None
    clip: float = CLIP

    def __post_init__(self):
        if len(self.knots) == 0:
            raise DomainError("a hypograph region needs at least one knot")
        ys = [k[0] for k in self.knots]
        for a, b in zip(ys, ys[1:]):
            if not b > a:
                raise DomainError("knot ordinates must be strictly increasing")
        slopes = self._segment_slopes()
        for a, b in zip(slopes, slopes[1:]):
            if b > a + _CONCAVITY_TOL:
                raise DomainError("boundary is not concave (segment slopes increase)")
        if self.left_slope is not None and slopes:
            if self.left_slope < slopes[0] - _CONCAVITY_TOL:
                raise DomainError("left ray breaks concavity")
        if self.right_slope is not None and slopes:
            if self.right_slope > slopes[-1] + _CONCAVITY_TOL:
                raise DomainError("right ray breaks concavity")
        if len(self.knots) == 1 and self.left_slope is not None and self.right_slope is not None:
            if self.right_slope > self.left_slope + _CONCAVITY_TOL:
                raise DomainError("single-knot rays break concavity")
        object.__setattr__(self, "_ys", [k[0] for k in self.knots])

    def _segment_slopes(self) -> list[float]:
        ks = self.knots
        return [
            (ks[i + 1][1] - ks[i][1]) / (ks[i + 1][0] - ks[i][0])
            for i in range(len(ks) - 1)
        ]

    def boundary(self, y: float) -> float:
        """t_y, with -inf outside the knot range when no ray is attached."""
        ks = self.knots
        if y < ks[0][0]:
            if self.left_slope is None:
                return -math.inf
            return ks[0][1] + self.left_slope * (y - ks[0][0])
        if y > ks[-1][0]:
            if self.right_slope is None:
                return -math.inf
            return ks[-1][1] + self.right_slope * (y - ks[-1][0])
        if len(ks) == 1:
            return ks[0][1]
        i = bisect.bisect_right(self._ys, y)
        i = min(max(i, 1), len(ks) - 1)
        y0, t0 = ks[i - 1]
        y1, t1 = ks[i]
        lam = (y - y0) / (y1 - y0)
        return t0 + lam * (t1 - t0)

    def membership(self, x: float, y: float) -> bool:
        return x <= self.boundary(y)

    def membership_many(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        ks = np.asarray(self.knots, dtype=float)
        ts = np.interp(ys, ks[:, 0], ks[:, 1])
        below = ys < ks[0, 0]
        above = ys > ks[-1, 0]
        if self.left_slope is None:
            ts = np.where(below, -np.inf, ts)
        else:
            ts = np.where(below, ks[0, 1] + self.left_slope * (ys - ks[0, 0]), ts)
        if self.right_slope is None:
            ts = np.where(above, -np.inf, ts)
        else:
            ts = np.where(above, ks[-1, 1] + self.right_slope * (ys - ks[-1, 0]), ts)
        return xs <= ts

    def to_dict(self) -> dict:
        return {
            "knots": [[float(y), float(t)] for y, t in self.knots],
            "left_slope": self.left_slope,
            "right_slope": self.right_slope,
            "clip": self.clip,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HypographRegion":
        return cls(
            knots=tuple((float(y), float(t)) for y, t in d["knots"]),
            left_slope=d.get("left_slope"),
            right_slope=d.get("right_slope"),
            clip=float(d.get("clip", CLIP)),
        )


@dataclass(frozen=True)
class SliceLine:
    """The vertical line x = abscissa."""

    abscissa: float

    @classmethod
    def for_measure(cls, p: float) -> "SliceLine":
        """The line through the left-tail quantile of measure p."""
        return cls(abscissa=inv_cdf(p))


def slice_length(region: HypographRegion, line: SliceLine) -> float:
    """Euclidean length of {y : t_y >= abscissa}; 0 if empty, inf if unbounded.

    Concavity of t makes the superlevel set an interval, so only its two
    endpoints need to be located (on the rays or between knots).
    """
    c = line.abscissa
    ks = region.knots
    ys = [k[0] for k in ks]
    ts = [k[1] for k in ks]
    s_l, s_r = region.left_slope, region.right_slope

    # Left endpoint.
    lo: float | None
    if ts[0] >= c:
        if s_l is None:
            lo = ys[0]
        elif s_l > 0.0:
            lo = ys[0] - (ts[0] - c) / s_l
        else:
            lo = -math.inf  # flat or rising leftward ray stays above c
    else:
        if s_l is not None and s_l < 0.0:
            return math.inf  # t -> +inf leftward, superlevel unbounded below
        lo = None
        for i in range(1, len(ks)):
            if ts[i] >= c:
                slope = (ts[i] - ts[i - 1]) / (ys[i] - ys[i - 1])
                lo = ys[i - 1] + (c - ts[i - 1]) / slope
                break
        if lo is None:
            # No knot reaches c; only a rising right ray can.
            if s_r is not None and s_r > 0.0:
                lo = ys[-1] + (c - ts[-1]) / s_r
            else:
                return 0.0

    # Right endpoint.
    hi: float | None
    if ts[-1] >= c:
        if s_r is None:
            hi = ys[-1]
        elif s_r < 0.0:
            hi = ys[-1] + (c - ts[-1]) / s_r
        else:
            hi = math.inf
    else:
        if s_r is not None and s_r > 0.0:
            return math.inf
        hi = None
        for i in range(len(ks) - 2, -1, -1):
            if ts[i] >= c:
                slope = (ts[i + 1] - ts[i]) / (ys[i + 1] - ys[i])
                hi = ys[i] + (c - ts[i]) / slope
                break
        if hi is None:
            if s_l is not None and s_l > 0.0:
                hi = ys[0] - (ts[0] - c) / s_l
            else:
                return 0.0

    if math.isinf(lo) or math.isinf(hi):
        return math.inf
    return max(0.0, hi - lo)


def gamma2_region(region: HypographRegion, tol: float = 1e-9) -> float:
    """Gaussian measure of the region: integral of pdf(y) * cdf(t_y).

    Quadrature over the clip window with knot-aligned panels; boundary values
    above the window are clipped to the window edge (the mass difference is
    below 1e-17).
    """
    clip = region.clip
    ys = [k[0] for k in region.knots]
    lo = -clip if region.left_slope is not None else max(-clip, ys[0])
    hi = clip if region.right_slope is not None else min(clip, ys[-1])
    if hi <= lo:
        return 0.0
    breaks = [lo, hi] + [y for y in ys if lo < y < hi]

    def integrand(y: float) -> float:
        t = region.boundary(y)
        if t == -math.inf:
            return 0.0
        return pdf(y) * cdf(min(t, clip))

    return integrate_panels(integrand, breaks, tol=tol)


@dataclass(frozen=True)
class SliceBoundReport:
    """Outcome of the slice-length implication check for one region."""

    p: float
    slice_len: float
    threshold: float
    measure: float | None
    vacuous: bool
    ok: bool


def verify_slice_bound(p: float, region: HypographRegion, tol: float = 1e-9) -> SliceBoundReport:
    """Check: a slice on the p-quantile line shorter than the symmetric
    interval of measure p forces region measure < p.

    Returns a vacuous report when the slice hypothesis fails (length >=
    threshold); otherwise computes the measure and flags ok = (measure < p).
    """
    if not 0.0 < p <= 0.5:
        raise DomainError(f"verify_slice_bound requires 0 < p <= 1/2, got {p}")
    length = slice_length(region, SliceLine.for_measure(p))
    threshold = 2.0 * inv_psi(p)
    if not length < threshold:
        return SliceBoundReport(p, length, threshold, None, True, True)
    measure = gamma2_region(region, tol=tol)
    return SliceBoundReport(p, length, threshold, measure, False, measure < p)


def cone_hypograph(p: float, theta: float) -> HypographRegion:
    """The symmetric leftward-opening cone of half-angle theta at level p,
    in hypograph position: apex at (h/tan(theta) - w, 0), rays through
    (-w, +-h)."""
    from .gaussian_core import GaussScalarTable

    tab = GaussScalarTable.from_p(p)
    apex = tab.h / math.tan(theta) - tab.w
    cot = 1.0 / math.tan(theta)
    return HypographRegion(knots=((0.0, apex),), left_slope=cot, right_slope=-cot)


def steiner_symmetrize(region: HypographRegion) -> HypographRegion:
    """Steiner symmetrization of a two-ray cone about the x-axis.

    Every vertical slice keeps its length exactly and is recentred on the
    axis; the result is again a cone. A zero-slope ray produces unbounded
    slices, whose symmetrization is the half-plane {x <= apex}.
    """
    if len(region.knots) != 1:
        raise DomainError("steiner_symmetrize expects a single-knot cone")
    s_l, s_r = region.left_slope, region.right_slope
    if s_l is None or s_r is None:
        raise DomainError("steiner_symmetrize expects two boundary rays")
    if s_l < 0.0 or s_r > 0.0 or (s_l == 0.0 and s_r == 0.0):
        raise DomainError("not a leftward-opening cone (need s_left >= 0 >= s_right)")
    y0, t0 = region.knots[0]
    if y0 == 0.0 and s_l == -s_r:
        return region  # already symmetric
    if s_l == 0.0 or s_r == 0.0:
        # Unbounded slices symmetrize to full vertical lines.
        return HypographRegion(knots=((0.0, t0),), left_slope=0.0, right_slope=0.0,
                               clip=region.clip)
    # Slice length at x <= t0 is (t0 - x) * (1/s_l - 1/s_r); preserve it.
    s_sym = 2.0 / (1.0 / s_l - 1.0 / s_r)
    return HypographRegion(knots=((0.0, t0),), left_slope=s_sym, right_slope=-s_sym,
                           clip=region.clip)


# ---------------------------------------------------------------------------
# Axis-sectioned bodies and their two-dimensional Gaussian shadow
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConeSection:
    """Cone with apex at the origin over an (n-1)-ball: height d, aperture t."""

    n: int
    d: float
    t: float

    def support(self) -> tuple[float, float]:
        return 0.0, self.d

    def section_measure(self, z: float) -> float:
        if z < 0.0 or z > self.d:
            return 0.0
        return ball_measure(self.n - 1, self.t * z)


@dataclass(frozen=True)
class BoxSection:
    """Axis-aligned box; the section axis is the last coordinate."""

    lo: tuple[float, ...]
    hi: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.lo)

    def support(self) -> tuple[float, float]:
        return self.lo[-1], self.hi[-1]

    def section_measure(self, z: float) -> float:
        if z < self.lo[-1] or z > self.hi[-1]:
            return 0.0
        m = 1.0
        for a, b in zip(self.lo[:-1], self.hi[:-1]):
            m *= cdf(b) - cdf(a)
        return m

    def total_measure(self) -> float:
        m = 1.0
        for a, b in zip(self.lo, self.hi):
            m *= cdf(b) - cdf(a)
        return m


@dataclass(frozen=True)
class CylinderSection:
    """Ball of radius r in the first n-1 coordinates times [z_lo, z_hi]."""

    n: int
    r: float
    z_lo: float
    z_hi: float

    def support(self) -> tuple[float, float]:
        return self.z_lo, self.z_hi

    def section_measure(self, z: float) -> float:
        if z < self.z_lo or z > self.z_hi:
            return 0.0
        return ball_measure(self.n - 1, self.r)

    def total_measure(self) -> float:
        return ball_measure(self.n - 1, self.r) * (cdf(self.z_hi) - cdf(self.z_lo))


@dataclass(frozen=True)
class HalfSpaceSection:
    """Half-space {x_n <= a}."""

    n: int
    a: float

    def support(self) -> tuple[float, float]:
        return -math.inf, self.a

    def section_measure(self, z: float) -> float:
        return 1.0 if z <= self.a else 0.0

    def total_measure(self) -> float:
        return cdf(self.a)


_T_FLOOR = -CLIP   # boundary values below the window are dropped as -inf
_Q_CAP = 1.0 - 1e-6  # quantile saturation: inv_cdf noise is 1e-16/pdf(t), so
                     # boundaries are capped where that noise stays << 1e-9


def ehrhard_symmetrize(body, n: int, grid: int = 1600) -> HypographRegion:
    """Two-dimensional Gaussian shadow of an axis-sectioned body.

    Each section at height z is replaced by the left half-line of equal
    Gaussian measure, t_z = inv_cdf(section measure); the resulting boundary
    is concave (a consequence of the Gaussian dilation inequality for convex
    bodies) and the region has the same total measure as the body.

    Sections of measure above the saturation level 1 - 1e-6 are clipped to a
    constant plateau (clipping from above preserves concavity); the induced
    measure error is below 1e-6 while keeping the sampled boundary clean of
    deep-tail quantile noise. Sections below the window floor are dropped.
    """
    if n != body.n:
        raise DomainError(f"dimension mismatch: body has n={body.n}, got {n}")
    z_lo, z_hi = body.support()
    z_lo = max(z_lo, -CLIP)
    z_hi = min(z_hi, CLIP)
    if not z_hi > z_lo:
        raise DomainError("body support does not intersect the quadrature window")
    span = z_hi - z_lo
    zs = [z_lo + span * i / grid for i in range(grid + 1)]
    # Geometric refinement near the support edges resolves steep boundaries;
    # spacing is bounded below so slope estimates stay above quantile noise.
    for k in range(2, 17):
        frac = 2.0 ** (-k)
        zs.append(z_lo + span * frac)
        zs.append(z_hi - span * frac)
    zs = sorted(set(zs))

    q_floor = cdf(_T_FLOOR)
    t_cap = inv_cdf(_Q_CAP)
    knots: list[tuple[float, float]] = []
    for z in zs:
        q = body.section_measure(z)
        if q <= q_floor:
            continue
        t = t_cap if q >= _Q_CAP else inv_cdf(q)
        knots.append((z, t))
    if len(knots) < 2:
        raise DomainError("sectioned body produced fewer than two usable knots")
    return HypographRegion(knots=tuple(knots), left_slope=None, right_slope=None)


def midpoint_concavity_violations(region: HypographRegion, tol: float = 1e-9) -> int:
    """Count interior knots lying below the chord of their neighbours by > tol."""
    ks = region.knots
    bad = 0
    for (y0, t0), (y1, t1), (y2, t2) in zip(ks, ks[1:], ks[2:]):
        lam = (y1 - y0) / (y2 - y0)
        chord = t0 + lam * (t2 - t0)
        if t1 < chord - tol:
            bad += 1
    return bad


# ---------------------------------------------------------------------------
# Seeded random region generator for the property suite
# ---------------------------------------------------------------------------


def random_hypograph(rng: np.random.Generator, p: float, max_tries: int = 500) -> HypographRegion:
    """Random concave hypograph whose slice on the p-quantile line is shorter
    than the symmetric interval of measure p (rejection resampling)."""
    threshold = 2.0 * inv_psi(p)
    line = SliceLine.for_measure(p)
    for _ in range(max_tries):
        k = int(rng.integers(3, 9))
        gaps = rng.uniform(0.15, 1.2, size=k - 1)
        ys = -3.0 + rng.uniform(0.0, 1.0) + np.concatenate([[0.0], np.cumsum(gaps)])
        drops = rng.uniform(0.05, 1.5, size=k - 2)
        s0 = rng.uniform(-1.5, 2.5)
        slopes = [s0]
        for d in drops:
            slopes.append(slopes[-1] - d)
        t0 = rng.uniform(-2.5, 0.5)
        ts = [t0]
        for i in range(k - 1):
            ts.append(ts[-1] + slopes[i] * (ys[i + 1] - ys[i]))
        left = None if rng.uniform() < 0.34 else slopes[0] + rng.exponential(1.0)
        right = None if rng.uniform() < 0.34 else slopes[-1] - rng.exponential(1.0)
        region = HypographRegion(
            knots=tuple((float(y), float(t)) for y, t in zip(ys, ts)),
            left_slope=left,
            right_slope=right,
        )
        if slice_length(region, line) < threshold:
            return region
    raise DomainError(f"could not sample an admissible region in {max_tries} tries")


def random_cone(rng: np.random.Generator) -> HypographRegion:
    """Random strictly-opening asymmetric cone in hypograph position."""
    apex_t = float(rng.uniform(-1.5, 1.0))
    apex_y = float(rng.uniform(-2.0, 2.0))
    s_l = float(rng.uniform(0.2, 5.0))
    s_r = -float(rng.uniform(0.2, 5.0))
    return HypographRegion(knots=((apex_y, apex_t),), left_slope=s_l, right_slope=s_r)

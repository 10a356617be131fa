"""Convex body oracles, gauge norms, and exact sign balancing.

Bodies are given by membership plus a gauge (Minkowski functional)
evaluation:

    gauge(x) = inf { r > 0 : x in r V },

finite everywhere when 0 is interior to V and V is "large enough" in the
direction of x. Closed forms cover lp balls and slabs; polytopes and shifted
cones fall back to bisection of membership along the ray through x.

Balancing of a finite tuple (u_1, ..., u_t) against a body V means the exact
minimum over sign vectors of gauge(sum eps_i u_i), computed by Gray-code
enumeration with incremental sum updates. The subset variant maximizes that
minimum over all sub-tuples; it lower-bounds the tuple-balancing constant of
any set containing the u_i and is exactly the quantity consumed by the
dyadic decomposition that converts balancing bounds into covering bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, DomainError

_GAUGE_TOL = 1e-10
_MAX_SCALE = 1e15


def _as_matrix(vectors) -> np.ndarray:
    arr = np.asarray(getattr(vectors, "vectors", vectors), dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if not np.all(np.isfinite(arr)):
        raise DomainError("vector tuple contains non-finite entries")
    return arr


@dataclass(frozen=True)
class VectorTuple:
    """A finite tuple of vectors subject to the enumeration budget t <= 24."""

    vectors: np.ndarray

    def __post_init__(self):
        arr = _as_matrix(self.vectors)
        if len(arr) > 24:
            raise BudgetError(f"tuple length {len(arr)} exceeds the budget of 24")
        object.__setattr__(self, "vectors", arr)

    @property
    def t(self) -> int:
        return len(self.vectors)

    @property
    def n(self) -> int:
        return self.vectors.shape[1]


class ConvexBody:
    """Base class: membership oracle plus gauge via ray bisection."""

    dim: int
    symmetric: bool = False
    inradius: float | None = None      # lower bound on dist(0, boundary)
    outer_radius: float | None = None  # sup of |x| over the body, None if unknown

    def membership(self, x: np.ndarray) -> bool:
        raise NotImplementedError

    def membership_many(self, X: np.ndarray) -> np.ndarray:
        return np.array([self.membership(row) for row in X], dtype=bool)

    def gauge(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        norm = float(np.linalg.norm(x))
        if norm == 0.0:
            return 0.0
        if self.inradius is not None and self.inradius > 0.0:
            hi = 2.0 * norm / self.inradius
            if not self.membership(x / hi):
                raise DomainError("inradius bracket failed; body lacks 0 in interior?")
        else:
            hi = 1.0
            while not self.membership(x / hi):
                hi *= 2.0
                if hi > _MAX_SCALE:
                    return math.inf
        lo = 0.0
        while hi - lo > _GAUGE_TOL * max(1.0, hi):
            mid = 0.5 * (lo + hi)
            if mid > 0.0 and self.membership(x / mid):
                hi = mid
            else:
                lo = mid
        return 0.5 * (lo + hi)

    def gauge_many(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        norms = np.linalg.norm(X, axis=1)
        out = np.zeros(len(X))
        nz = norms > 0.0
        if not nz.any():
            return out
        Xn = X[nz]
        if self.inradius is not None and self.inradius > 0.0:
            hi = 2.0 * norms[nz] / self.inradius
        else:
            hi = np.ones(nz.sum())
            for _ in range(64):
                outside = ~self.membership_many(Xn / hi[:, None])
                if not outside.any():
                    break
                hi[outside] *= 2.0
        lo = np.zeros_like(hi)
        for _ in range(64):
            mid = 0.5 * (lo + hi)
            inside = self.membership_many(Xn / np.where(mid > 0, mid, 1.0)[:, None]) & (mid > 0)
            hi = np.where(inside, mid, hi)
            lo = np.where(inside, lo, mid)
        res = 0.5 * (lo + hi)
        res[hi > _MAX_SCALE] = math.inf
        out[nz] = res
        return out


class LpBall(ConvexBody):
    """Unit lp ball in R^n; gauge is the lp norm (closed form)."""

    symmetric = True

    def __init__(self, dim: int, p: float):
        if dim < 1 or p < 1.0:
            raise DomainError(f"LpBall requires dim >= 1, p >= 1, got {dim}, {p}")
        self.dim = dim
        self.p = p
        if p <= 2.0:
            self.outer_radius = 1.0
            self.inradius = dim ** (0.5 - 1.0 / p)
        else:
            self.outer_radius = dim ** (0.5 - 1.0 / p) if math.isfinite(p) else math.sqrt(dim)
            self.inradius = 1.0

    def gauge(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        if math.isinf(self.p):
            return float(np.max(np.abs(x)))
        return float(np.sum(np.abs(x) ** self.p) ** (1.0 / self.p))

    def gauge_many(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if math.isinf(self.p):
            return np.max(np.abs(X), axis=1)
        return np.sum(np.abs(X) ** self.p, axis=1) ** (1.0 / self.p)

    def membership(self, x: np.ndarray) -> bool:
        return self.gauge(x) <= 1.0 + 1e-12

    def membership_many(self, X: np.ndarray) -> np.ndarray:
        return self.gauge_many(X) <= 1.0 + 1e-12


class Slab(ConvexBody):
    """{x : |<x, u>| <= c} for a unit normal u; gauge |<x, u>|/c."""

    symmetric = True
    outer_radius = None  # unbounded

    def __init__(self, normal, half_width: float):
        u = np.asarray(normal, dtype=float)
        nrm = float(np.linalg.norm(u))
        if nrm == 0.0 or half_width <= 0.0:
            raise DomainError("Slab requires a nonzero normal and positive half-width")
        self.dim = len(u)
        self.normal = u / nrm
        self.half_width = float(half_width)
        self.inradius = self.half_width

    def gauge(self, x: np.ndarray) -> float:
        return abs(float(np.dot(x, self.normal))) / self.half_width

    def gauge_many(self, X: np.ndarray) -> np.ndarray:
        return np.abs(np.asarray(X, dtype=float) @ self.normal) / self.half_width

    def membership(self, x: np.ndarray) -> bool:
        return self.gauge(x) <= 1.0 + 1e-12

    def membership_many(self, X: np.ndarray) -> np.ndarray:
        return self.gauge_many(X) <= 1.0 + 1e-12


class Polytope(ConvexBody):
    """H-representation {x : A x <= b}; requires b > 0 so 0 is interior.

    Membership is the defining system; gauge uses the generic ray bisection
    with the inradius bracket min_i b_i / |a_i|.
    """

    def __init__(self, A, b, symmetric: bool = False):
        self.A = np.asarray(A, dtype=float)
        self.b = np.asarray(b, dtype=float)
        if self.A.ndim != 2 or self.A.shape[0] != len(self.b):
            raise DomainError("Polytope needs A (m x n) and b (m)")
        if not np.all(self.b > 0.0):
            raise DomainError("Polytope requires b > 0 (origin interior)")
        self.dim = self.A.shape[1]
        self.symmetric = symmetric
        row_norms = np.linalg.norm(self.A, axis=1)
        if np.any(row_norms == 0.0):
            raise DomainError("Polytope has zero rows")
        self.inradius = float(np.min(self.b / row_norms))

    def membership(self, x: np.ndarray) -> bool:
        return bool(np.all(self.A @ np.asarray(x, dtype=float) <= self.b + 1e-12))

    def membership_many(self, X: np.ndarray) -> np.ndarray:
        return np.all(np.asarray(X, dtype=float) @ self.A.T <= self.b + 1e-12, axis=1)


class ShiftedCone(ConvexBody):
    """Finite cone of height d and aperture t over the last axis, shifted
    down by s so that the origin becomes interior: {x : 0 <= x_n + s <= d,
    |x'| <= t (x_n + s)}."""

    symmetric = False

    def __init__(self, d: float, t: float, s: float, dim: int = 2):
        if not (d > 0.0 and t > 0.0 and 0.0 < s < d):
            raise DomainError("ShiftedCone requires d > 0, t > 0, 0 < s < d")
        self.d, self.t, self.s = float(d), float(t), float(s)
        self.dim = dim
        self.inradius = min(t * s / math.sqrt(1.0 + t * t), d - s)
        self.outer_radius = math.hypot(t * d, d)

    def membership(self, x: np.ndarray) -> bool:
        x = np.asarray(x, dtype=float)
        z = x[-1] + self.s
        if z < -1e-12 or z > self.d + 1e-12:
            return False
        return float(np.linalg.norm(x[:-1])) <= self.t * z + 1e-12

    def membership_many(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        z = X[:, -1] + self.s
        radial = np.linalg.norm(X[:, :-1], axis=1)
        return (z >= -1e-12) & (z <= self.d + 1e-12) & (radial <= self.t * z + 1e-12)


class Translated(ConvexBody):
    """V + shift; membership-only oracle, gauge by generic bisection."""

    def __init__(self, base: ConvexBody, shift):
        self.base = base
        self.shift = np.asarray(shift, dtype=float)
        self.dim = base.dim
        self.symmetric = False
        self.outer_radius = None
        self.inradius = None
        if not self.membership(np.zeros(self.dim)):
            raise DomainError("translated body no longer contains the origin")

    def membership(self, x: np.ndarray) -> bool:
        return self.base.membership(np.asarray(x, dtype=float) - self.shift)

    def membership_many(self, X: np.ndarray) -> np.ndarray:
        return self.base.membership_many(np.asarray(X, dtype=float) - self.shift)


class Scaled(ConvexBody):
    """a * V for a > 0; gauge scales by 1/a."""

    def __init__(self, base: ConvexBody, a: float):
        if a <= 0.0:
            raise DomainError("Scaled requires a > 0")
        self.base = base
        self.a = float(a)
        self.dim = base.dim
        self.symmetric = base.symmetric
        self.inradius = None if base.inradius is None else base.inradius * a
        self.outer_radius = None if base.outer_radius is None else base.outer_radius * a

    def gauge(self, x: np.ndarray) -> float:
        return self.base.gauge(x) / self.a

    def gauge_many(self, X: np.ndarray) -> np.ndarray:
        return self.base.gauge_many(X) / self.a

    def membership(self, x: np.ndarray) -> bool:
        return self.base.membership(np.asarray(x, dtype=float) / self.a)

    def membership_many(self, X: np.ndarray) -> np.ndarray:
        return self.base.membership_many(np.asarray(X, dtype=float) / self.a)


class ProductExtension(ConvexBody):
    """V x R: one trailing free coordinate appended to the base body."""

    def __init__(self, base: ConvexBody):
        self.base = base
        self.dim = base.dim + 1
        self.symmetric = base.symmetric
        self.inradius = base.inradius
        self.outer_radius = None

    def gauge(self, x: np.ndarray) -> float:
        return self.base.gauge(np.asarray(x, dtype=float)[:-1])

    def gauge_many(self, X: np.ndarray) -> np.ndarray:
        return self.base.gauge_many(np.asarray(X, dtype=float)[:, :-1])

    def membership(self, x: np.ndarray) -> bool:
        return self.base.membership(np.asarray(x, dtype=float)[:-1])

    def membership_many(self, X: np.ndarray) -> np.ndarray:
        return self.base.membership_many(np.asarray(X, dtype=float)[:, :-1])


def body_from_dict(d: dict) -> ConvexBody:
    """Deserialize a body from the CLI JSON schema."""
    kind = d["kind"]
    if kind == "lp_ball":
        return LpBall(dim=int(d["n"]), p=float(d["p"]))
    if kind == "slab":
        return Slab(normal=d["normal"], half_width=float(d["half_width"]))
    if kind == "polytope":
        return Polytope(A=d["A"], b=d["b"], symmetric=bool(d.get("symmetric", False)))
    if kind == "shifted_cone":
        return ShiftedCone(d=float(d["d"]), t=float(d["t"]), s=float(d["s"]),
                           dim=int(d.get("n", 2)))
    raise DomainError(f"unknown body kind {kind!r}")


# ---------------------------------------------------------------------------
# Gauge and balancing operations
# ---------------------------------------------------------------------------


def gauge_norm(body: ConvexBody, x) -> float:
    """gauge(x) with respect to the body; requires 0 interior to the body."""
    return body.gauge(np.asarray(x, dtype=float))


def min_sign_balance(vectors, body: ConvexBody) -> tuple[float, tuple[int, ...]]:
    """Exact minimum of gauge(sum eps_i u_i) over all sign vectors.

    Gray-code order with incremental sum updates; for symmetric bodies the
    first sign is fixed (global flips leave the gauge unchanged). Returns the
    minimum and one achieving sign vector.
    """
    U = _as_matrix(vectors)
    t = len(U)
    if t == 0:
        return 0.0, ()
    if t > 24:
        raise BudgetError(f"tuple length {t} exceeds the budget of 24")
    signs = np.ones(t)
    cur = U.sum(axis=0)
    best = body.gauge(cur)
    best_signs = signs.copy()
    bits = t - 1 if (body.symmetric and t > 1) else t
    for i in range(1, 1 << bits):
        j = (i & -i).bit_length() - 1
        signs[j] = -signs[j]
        cur = cur + 2.0 * signs[j] * U[j]
        if i % 4096 == 0:
            cur = signs @ U  # kill accumulated drift
        val = body.gauge(cur)
        if val < best:
            best = val
            best_signs = signs.copy()
    return float(best), tuple(int(s) for s in best_signs)


def beta_subset(vectors, body: ConvexBody) -> float:
    """max over subsets Z of min_sign_balance restricted to {u_i : i in Z}.

    This is a certified lower bound for the balancing constant of any set
    containing the tuple, attained by padding the complement with zeros.
    """
    U = _as_matrix(vectors)
    t = len(U)
    if t > 20:
        raise BudgetError(f"tuple length {t} exceeds the subset budget of 20")
    best = 0.0
    for mask in range(1, 1 << t):
        idx = [i for i in range(t) if mask >> i & 1]
        val, _ = min_sign_balance(U[idx], body)
        if val > best:
            best = val
    return best


def dyadic_decompose(
    vectors,
    body: ConvexBody,
    y,
    depth: int,
    bound: float | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Write a dyadic point of the parallelepiped as vertex + small remainder.

    For y = sum c_i u_i with c_i in [0, 1] dyadic of depth k, returns
    (z0, v) with z0 a 0/1-combination of the u_i, y = z0 + v exactly, and
    gauge(v) <= B (1 - 2^-k) where B bounds the subset balancing constant
    (computed when not supplied). Levels follow the halving recursion
    P^{k+1} = (P^k + P^0) / 2, balancing the half-weight index set at each
    level.
    """
    U = _as_matrix(vectors)
    t, n = U.shape
    if t != n or abs(np.linalg.det(U)) < 1e-12:
        raise DomainError("dyadic_decompose needs n linearly independent vectors")
    if depth > 12:
        raise BudgetError(f"dyadic depth {depth} exceeds the budget of 12")
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    y = np.asarray(y, dtype=float)
    coeffs = np.linalg.solve(U.T, y)
    scaled = coeffs * (1 << depth)
    ints = np.rint(scaled)
    if np.max(np.abs(scaled - ints)) > 1e-9 * (1 << depth):
        raise DomainError("point is not dyadic at the requested depth")
    ints = ints.astype(int)
    if np.any(ints < 0) or np.any(ints > (1 << depth)):
        raise DomainError("dyadic coefficients must lie in [0, 1]")
    if bound is None:
        bound = beta_subset(U, body)

    def rec(c: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
        if k == 0:
            return c.copy(), np.zeros(n)
        half = 1 << (k - 1)
        delta = (c >= half).astype(int)
        z_prev, v_prev = rec(c - delta * half, k - 1)
        q = delta + z_prev  # in {0, 1, 2}
        ones = np.flatnonzero(q == 1)
        z0 = (q == 2).astype(int)
        if len(ones) == 0:
            return z0, 0.5 * v_prev
        _, eps = min_sign_balance(U[ones], body)
        eps = np.asarray(eps)
        z0[ones[eps == -1]] = 1
        spread = (eps[:, None] * U[ones]).sum(axis=0)
        return z0, 0.5 * spread + 0.5 * v_prev

    z_bits, v = rec(ints, depth)
    z0 = z_bits @ U
    return z0, v

"""Small-dimension lattice computations against gauge bodies.

Successive minima are exact up to the enumeration radius (coefficient boxes
sized from the inverse-basis row norms, with detection and doubling on
failure); the covering radius is a grid maximum over the fundamental
parallelepiped of the gauge distance to the lattice, sharpened by a local
pattern search. Dimensions are capped at desk scale (4 for minima, 3 for
covering radii).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .balancing import ConvexBody, ProductExtension, beta_subset, _as_matrix
from .errors import DomainError, EnumerationError

_MAX_DIM_MINIMA = 4
_MAX_DIM_COVERING = 3


@dataclass(frozen=True)
class LatticeBasis:
    """Full-rank lattice given by an invertible matrix of column generators."""

    basis: np.ndarray

    def __post_init__(self):
        B = np.asarray(self.basis, dtype=float)
        if B.ndim != 2 or B.shape[0] != B.shape[1]:
            raise DomainError("basis must be a square matrix")
        n = B.shape[0]
        if n > _MAX_DIM_MINIMA:
            raise DomainError(f"dimension {n} exceeds the desk-scale cap of {_MAX_DIM_MINIMA}")
        scale = float(np.max(np.abs(B))) or 1.0
        if abs(np.linalg.det(B)) < 1e-12 * scale**n:
            raise DomainError("basis is singular")
        gram = B.T @ B
        if np.max(np.abs(gram - gram.T)) > 1e-10:
            raise DomainError("Gram matrix is not symmetric")
        if np.min(np.linalg.eigvalsh(gram)) <= 0.0:
            raise DomainError("Gram matrix is not positive definite")
        object.__setattr__(self, "basis", B)

    @property
    def n(self) -> int:
        return self.basis.shape[0]

    @classmethod
    def from_vectors(cls, vectors) -> "LatticeBasis":
        """Generators given as rows (the CLI row-major convention)."""
        return cls(basis=_as_matrix(vectors).T)

    def scaled(self, a: float) -> "LatticeBasis":
        return LatticeBasis(basis=self.basis * a)


def _reduce_basis(B: np.ndarray, delta: float = 0.99) -> np.ndarray:
    """Lenstra-Lenstra-Lovasz reduction (tiny dimensions, real arithmetic)."""
    B = B.copy()
    n = B.shape[1]
    if n == 1:
        return B

    def gso(M):
        Q = M.astype(float).copy()
        mu = np.eye(n)
        for i in range(n):
            for j in range(i):
                denom = Q[:, j] @ Q[:, j]
                mu[i, j] = (M[:, i] @ Q[:, j]) / denom
                Q[:, i] -= mu[i, j] * Q[:, j]
        return Q, mu

    k = 1
    guard = 0
    while k < n and guard < 10_000:
        guard += 1
        Q, mu = gso(B)
        for j in range(k - 1, -1, -1):
            q = round(mu[k, j])
            if q != 0:
                B[:, k] -= q * B[:, j]
                Q, mu = gso(B)
        if Q[:, k] @ Q[:, k] >= (delta - mu[k, k - 1] ** 2) * (Q[:, k - 1] @ Q[:, k - 1]):
            k += 1
        else:
            B[:, [k - 1, k]] = B[:, [k, k - 1]]
            k = max(1, k - 1)
    return B


def _coefficient_box(B: np.ndarray, radius: float) -> list[int]:
    inv = np.linalg.inv(B)
    return [max(1, int(math.ceil(2.0 * float(np.linalg.norm(row)) * radius))) for row in inv]


def successive_minima(L: LatticeBasis, U: ConvexBody, k_max: int) -> list[float]:
    """First k_max successive minima of the lattice with respect to gauge U.

    Enumerates lattice vectors inside a Euclidean ball large enough to
    contain every candidate, sorts by gauge, and greedily extracts linearly
    independent representatives. U must be symmetric, bounded, and contain
    the origin in its interior.
    """
    n = L.n
    if not 1 <= k_max <= n:
        raise DomainError(f"k_max must lie in [1, {n}]")
    if not U.symmetric:
        raise DomainError("successive minima require a symmetric gauge body")
    if U.outer_radius is None or not math.isfinite(U.outer_radius):
        raise DomainError("successive minima require a bounded gauge body")
    B = _reduce_basis(L.basis)
    gauge_bound = max(float(U.gauge(B[:, i])) for i in range(n))
    radius = gauge_bound * U.outer_radius * 1.05

    for _ in range(6):
        box = _coefficient_box(B, radius)
        ranges = [range(-m, m + 1) for m in box]
        coeffs = np.array(list(itertools.product(*ranges)), dtype=float)
        coeffs = coeffs[np.any(coeffs != 0.0, axis=1)]
        vecs = coeffs @ B.T
        keep = np.linalg.norm(vecs, axis=1) <= radius + 1e-12
        vecs = vecs[keep]
        if len(vecs) == 0:
            radius *= 2.0
            continue
        gauges = U.gauge_many(vecs)
        order = np.argsort(gauges, kind="stable")
        minima: list[float] = []
        chosen: list[np.ndarray] = []
        for idx in order:
            v = vecs[idx]
            if chosen:
                M = np.column_stack(chosen + [v])
                if np.linalg.matrix_rank(M, tol=1e-9) <= len(chosen):
                    continue
            chosen.append(v)
            minima.append(float(gauges[idx]))
            if len(minima) == k_max:
                break
        if len(minima) == k_max and minima[-1] * U.outer_radius <= radius + 1e-9:
            return minima
        radius *= 2.0
    raise EnumerationError("enumeration radius insufficient for successive minima", radius)


def _lattice_offsets(n: int, spread: int = 3) -> np.ndarray:
    return np.array(list(itertools.product(range(-spread + 1, spread + 1), repeat=n)), dtype=float)


def _gauge_to_lattice(X: np.ndarray, B: np.ndarray, V: ConvexBody, offsets: np.ndarray) -> np.ndarray:
    best = np.full(len(X), np.inf)
    for z in offsets:
        best = np.minimum(best, V.gauge_many(X - B @ z))
    return best


def covering_radius(L: LatticeBasis, V: ConvexBody, grid: int = 48) -> float:
    """Covering radius sup_x min_l gauge_V(x - l) by fundamental-domain grid
    search with local pattern-search refinement.

    Accuracy is bounded by the grid diameter; the refinement pushes the
    reported maximum up to the local optimum (2e-2 relative target at the
    default resolution). V must contain 0 in its interior (translate first
    if needed; the covering radius is translation invariant).
    """
    n = L.n
    if n > _MAX_DIM_COVERING:
        raise DomainError(f"dimension {n} exceeds the covering-radius cap of {_MAX_DIM_COVERING}")
    B = _reduce_basis(L.basis)
    offsets = _lattice_offsets(n)
    axes = [np.linspace(0.0, 1.0, grid, endpoint=False) + 0.5 / grid] * n
    fracs = np.array(list(itertools.product(*axes)))
    X = fracs @ B.T
    vals = _gauge_to_lattice(X, B, V, offsets)
    best_idx = int(np.argmax(vals))
    best_x = X[best_idx]
    best_val = float(vals[best_idx])

    # Pattern search around the best grid point (maximizing the min-gauge).
    step = float(np.max(np.linalg.norm(B, axis=0))) / grid
    dirs = np.vstack([np.eye(n), -np.eye(n)])
    while step > 1e-4:
        moved = False
        for d in dirs:
            cand = best_x + step * d
            val = float(_gauge_to_lattice(cand[None, :], B, V, offsets)[0])
            if val > best_val + 1e-14:
                best_val, best_x = val, cand
                moved = True
        if not moved:
            step *= 0.5
    return best_val


@dataclass(frozen=True)
class AlphaCertificate:
    """Certified ratio mu / lambda_n for one lattice; a lower bound witness."""

    lattice: LatticeBasis
    lambda_n: float
    mu: float

    @property
    def ratio(self) -> float:
        return self.mu / self.lambda_n


def alpha_certificate(L: LatticeBasis, U: ConvexBody, V: ConvexBody, grid: int = 48) -> AlphaCertificate:
    lam = successive_minima(L, U, L.n)[-1]
    mu = covering_radius(L, V, grid=grid)
    return AlphaCertificate(lattice=L, lambda_n=lam, mu=mu)


@dataclass(frozen=True)
class CoveringVsBalanceReport:
    mu: float
    beta_sub: float
    slack: float
    ok: bool


def verify_alpha_le_beta(vectors, V: ConvexBody, grid: int = 48,
                         slack: float = 3e-2) -> CoveringVsBalanceReport:
    """Covering radius of the lattice spanned by the tuple never exceeds the
    subset balancing constant of the tuple (up to grid slack)."""
    U = _as_matrix(vectors)
    L = LatticeBasis.from_vectors(U)
    mu = covering_radius(L, V, grid=grid)
    bsub = beta_subset(U, V)
    return CoveringVsBalanceReport(mu=mu, beta_sub=bsub, slack=slack, ok=mu <= bsub + slack)


@dataclass(frozen=True)
class TensorReport:
    mu_base: float
    mu_extended: float
    tolerance: float
    ok: bool


def tensor_extend(L: LatticeBasis, V: ConvexBody, grid: int = 24,
                  tolerance: float = 3e-2) -> TensorReport:
    """Append a unit lattice direction and a free body coordinate; the
    covering radius must be unchanged (the tensorization step behind
    monotonicity of the optimal bounds in the dimension)."""
    if L.n + 1 > _MAX_DIM_COVERING:
        raise DomainError("extended dimension exceeds the covering-radius cap")
    mu_base = covering_radius(L, V, grid=grid)
    ext = np.zeros((L.n + 1, L.n + 1))
    ext[: L.n, : L.n] = L.basis
    ext[L.n, L.n] = 1.0
    mu_ext = covering_radius(LatticeBasis(basis=ext), ProductExtension(V), grid=grid)
    return TensorReport(mu_base=mu_base, mu_extended=mu_ext,
                        tolerance=tolerance, ok=abs(mu_ext - mu_base) <= tolerance)

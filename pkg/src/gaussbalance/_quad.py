"""Adaptive Gauss-Legendre quadrature with interval bisection.

All planar measures in this package reduce to one-dimensional integrals of
smooth (or piecewise smooth) integrands, so a fixed-order Gauss-Legendre rule
refined by panel bisection converges very quickly and gives a cheap error
estimate (coarse panel vs. its two halves).
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import QuadratureError

_NODES_20, _WEIGHTS_20 = np.polynomial.legendre.leggauss(20)
_NODES = tuple(_NODES_20.tolist())
_WEIGHTS = tuple(_WEIGHTS_20.tolist())


def _panel(f: Callable[[float], float], a: float, b: float) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * sum(w * f(mid + half * x) for x, w in zip(_NODES, _WEIGHTS))


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = 48,
) -> float:
    """Integrate f over [a, b] to absolute tolerance tol.

    Panels are bisected until the coarse estimate agrees with the sum of the
    two half-panel estimates; disagreement beyond max_depth raises
    QuadratureError carrying the best estimate so far.
    """
    if a == b:
        return 0.0
    if b < a:
        return -integrate(f, b, a, tol=tol, max_depth=max_depth)

    total = 0.0
    failed = False
    # stack entries: (a, b, coarse_estimate, depth, local_tol)
    stack = [(a, b, _panel(f, a, b), 0, tol)]
    while stack:
        lo, hi, coarse, depth, ltol = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        fine = left + right
        if abs(fine - coarse) <= max(ltol, 1e-16 * abs(fine)) or depth >= max_depth:
            if depth >= max_depth and abs(fine - coarse) > max(ltol, 1e-16 * abs(fine)):
                failed = True
            total += fine
        else:
            stack.append((lo, mid, left, depth + 1, 0.5 * ltol))
            stack.append((mid, hi, right, depth + 1, 0.5 * ltol))
    if failed:
        raise QuadratureError("adaptive quadrature did not converge", total)
    return total


def integrate_panels(
    f: Callable[[float], float],
    breakpoints: list[float],
    tol: float = 1e-10,
) -> float:
    """Integrate f over consecutive [breakpoints[i], breakpoints[i+1]] panels.

    Breakpoints should include every kink of f; each panel then sees a smooth
    integrand. The tolerance is split evenly across panels.
    """
    xs = sorted(set(breakpoints))
    if len(xs) < 2:
        return 0.0
    n = len(xs) - 1
    return sum(integrate(f, xs[i], xs[i + 1], tol=tol / n) for i in range(n))

"""Numerical workbench for Gaussian measures of convex bodies, planar cone
inequalities, vector balancing constants and small-dimension lattice
certificates."""

from . import (
    balancing,
    bounds,
    counterexample,
    gaussian_core,
    lattice,
    planar_cones,
    planar_regions,
)

__version__ = "0.1.0"

__all__ = [
    "balancing",
    "bounds",
    "counterexample",
    "gaussian_core",
    "lattice",
    "planar_cones",
    "planar_regions",
    "__version__",
]

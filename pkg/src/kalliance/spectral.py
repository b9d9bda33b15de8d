"""Laplacian spectrum: algebraic connectivity and spectral radius."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError

__all__ = ["SpectralSummary", "laplacian_matrix", "laplacian_spectrum", "snap", "ceil_snap", "floor_snap"]

SNAP_TOL = 1e-6


@dataclass(frozen=True)
class SpectralSummary:
    mu: float
    mu_star: float
    eigenvalues: tuple[float, ...]
    tolerance: float


def laplacian_matrix(g: Graph) -> np.ndarray:
    L = np.zeros((g.n, g.n))
    for u, v in g.edges:
        L[u, v] = L[v, u] = -1.0
    L[np.diag_indices(g.n)] = g.degrees
    return L


def laplacian_spectrum(g: Graph) -> SpectralSummary:
    """Eigenvalues of D - A, with mu the second smallest and mu_star the largest.

    ``tolerance`` is the largest residual ``|L x - lambda x|`` over the
    computed eigenpairs; for a symmetric matrix it bounds each eigenvalue
    error.
    """
    if g.n < 2:
        raise GraphError("the Laplacian spectrum needs at least 2 vertices")
    L = laplacian_matrix(g)
    w, vecs = np.linalg.eigh(L)
    resid = np.linalg.norm(L @ vecs - vecs * w, axis=0).max()
    # L is positive semidefinite; only round-off can push an eigenvalue below 0
    w = np.maximum(w, 0.0)
    return SpectralSummary(float(w[1]), float(w[-1]), tuple(float(x) for x in w), float(resid))


def snap(x: float) -> float:
    """Round ``x`` to the nearest integer when it is within ``SNAP_TOL`` of one."""
    r = round(x)
    return float(r) if abs(x - r) <= SNAP_TOL else x


def ceil_snap(x: float) -> int:
    return math.ceil(snap(x))


def floor_snap(x: float) -> int:
    return math.floor(snap(x))

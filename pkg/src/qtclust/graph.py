"""Similarity networks: pairwise distances, Gaussian adjacency, Laplacians."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, IsolatedNodeError, ParameterError

SYMMETRY_TOL = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PointSet:
    """m sample points in R^d with optional integer ground-truth labels."""

    points: np.ndarray
    truth: np.ndarray | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 2 or pts.shape[1] < 1:
            raise InputError("points must form an m x d array with m >= 2 and d >= 1")
        if not np.isfinite(pts).all():
            raise InputError("points contain non-finite coordinates")
        object.__setattr__(self, "points", _readonly(pts))
        if self.truth is not None:
            truth = np.asarray(self.truth, dtype=int)
            if truth.shape != (pts.shape[0],):
                raise InputError("truth labels must have exactly one entry per point")
            object.__setattr__(self, "truth", _readonly(truth))

    @property
    def m(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class GraphBundle:
    """Adjacency, degrees, and both Laplacians of one similarity network.

    ``hamiltonian`` is the symmetric degree-normalized Laplacian
    I - D^{-1/2} A D^{-1/2}; it generates the quantum walk and shares its
    spectrum with the random-walk normalization.  ``proximity`` records the
    Gaussian bandwidth used to build ``adjacency`` (NaN when the adjacency
    came from elsewhere, e.g. a kernel matrix).
    """

    adjacency: np.ndarray
    degrees: np.ndarray
    laplacian: np.ndarray
    hamiltonian: np.ndarray
    proximity: float = math.nan

    def __post_init__(self):
        for name in ("adjacency", "degrees", "laplacian", "hamiltonian"):
            object.__setattr__(self, name, _readonly(np.asarray(getattr(self, name), dtype=float)))

    @property
    def m(self) -> int:
        return self.adjacency.shape[0]


def pairwise_distances(points: PointSet | np.ndarray) -> np.ndarray:
    """Euclidean distance matrix, bitwise identical to a per-pair norm loop."""
    x = points.points if isinstance(points, PointSet) else np.asarray(points, dtype=float)
    if x.ndim != 2 or x.shape[0] < 2:
        raise InputError("need at least two points in an m x d array")
    if not np.isfinite(x).all():
        raise InputError("points contain non-finite coordinates")
    m, d = x.shape
    out = np.empty((m, m))
    # chunk rows so the (rows, m, d) scratch block stays small
    step = max(1, (16 << 20) // max(1, 8 * m * d))
    for lo in range(0, m, step):
        diff = x[lo : lo + step, None, :] - x[None, :, :]
        out[lo : lo + step] = np.sqrt((diff * diff).sum(axis=-1))
    return out


def quantile_proximity(dist: np.ndarray, eps: float) -> float:
    """The eps-quantile (linear interpolation) of the positive pairwise distances."""
    if not (isinstance(eps, (int, float)) and 0.0 < eps < 1.0):
        raise ParameterError(f"eps must lie strictly between 0 and 1, got {eps!r}")
    d = np.asarray(dist, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise InputError("distance matrix must be square")
    upper = d[np.triu_indices(d.shape[0], k=1)]
    positive = upper[upper > 0.0]
    if positive.size == 0:
        raise InputError("all pairwise distances are zero; no proximity scale exists")
    return float(np.quantile(positive, eps))


def gaussian_adjacency(dist: np.ndarray, r_eps: float) -> np.ndarray:
    """A_ij = exp(-(r_ij / r_eps)^2); unit diagonal, entries in (0, 1]."""
    if not (np.isfinite(r_eps) and r_eps > 0.0):
        raise ParameterError(f"proximity scale must be a positive finite number, got {r_eps!r}")
    d = np.asarray(dist, dtype=float)
    return np.exp(-np.square(d / r_eps))


def laplacians(adjacency: np.ndarray, proximity: float = math.nan) -> GraphBundle:
    """Degrees, plain Laplacian D - A, and the symmetric normalized Laplacian.

    The normalized form annihilates the sqrt-degree vector, so a connected
    graph always has a zero mode proportional to sqrt(deg).
    """
    a = np.asarray(adjacency, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError("adjacency must be square")
    if not np.isfinite(a).all():
        raise InputError("adjacency contains non-finite entries")
    if np.abs(a - a.T).max() > SYMMETRY_TOL:
        raise InputError("adjacency must be symmetric")
    if a.min() < 0.0:
        raise InputError("adjacency entries must be nonnegative")
    degrees = a.sum(axis=1)
    if (degrees <= 0.0).any():
        bad = int(np.nonzero(degrees <= 0.0)[0][0])
        raise IsolatedNodeError(f"node {bad} has zero degree and cannot be normalized")
    laplacian = np.diag(degrees) - a
    inv_sqrt = 1.0 / np.sqrt(degrees)
    hamiltonian = np.eye(a.shape[0]) - a * inv_sqrt[:, None] * inv_sqrt[None, :]
    hamiltonian = (hamiltonian + hamiltonian.T) / 2.0
    return GraphBundle(
        adjacency=a,
        degrees=degrees,
        laplacian=laplacian,
        hamiltonian=hamiltonian,
        proximity=float(proximity),
    )


def similarity_graph(points: PointSet, eps: float) -> GraphBundle:
    """Distances -> quantile bandwidth -> Gaussian adjacency -> Laplacians."""
    dist = pairwise_distances(points)
    r_eps = quantile_proximity(dist, eps)
    return laplacians(gaussian_adjacency(dist, r_eps), proximity=r_eps)

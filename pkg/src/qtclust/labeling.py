"""Turn one phase field into q discrete labels: gap cuts or k-means on a circle."""

from __future__ import annotations

import warnings

import numpy as np

from .errors import ParameterError


class FragmentationWarning(UserWarning):
    """A cut landed on tied phases and split them by index order."""


def labels_direct_difference(phases: np.ndarray, q: int) -> np.ndarray:
    """Label by cutting the sorted phases at the q-1 largest chord gaps.

    Phases are sorted ascending, mapped to unit vectors, and consecutive
    chord lengths are computed; the q-1 largest (ties broken toward the
    smaller sorted index) split the sorted order into q contiguous arcs.
    Chord length is used instead of arc length because it damps small
    fluctuations relative to genuine jumps.
    """
    theta = np.asarray(phases, dtype=float)
    m = theta.size
    if not 1 <= q <= m:
        raise ParameterError(f"q must be between 1 and {m}, got {q}")
    if q == 1:
        return np.zeros(m, dtype=int)
    order = np.argsort(theta, kind="stable")
    srt = theta[order]
    unit = np.column_stack([np.cos(srt), np.sin(srt)])
    step = unit[1:] - unit[:-1]
    gaps = np.sqrt((step * step).sum(axis=1))
    pick = np.lexsort((np.arange(m - 1), -gaps))[: q - 1]
    if gaps[pick].min() == 0.0:
        warnings.warn(
            "cut placed on tied phases; labels split by index order",
            FragmentationWarning,
            stacklevel=2,
        )
    cuts = np.sort(pick)
    ranks = np.empty(m, dtype=int)
    ranks[order] = np.arange(m)
    return np.searchsorted(cuts, ranks, side="left").astype(int)


def labels_circle_clustering(phases: np.ndarray, q: int, seed: int) -> np.ndarray:
    """Label by running k-means on the phases embedded on the unit circle."""
    theta = np.asarray(phases, dtype=float)
    if not 1 <= q <= theta.size:
        raise ParameterError(f"q must be between 1 and {theta.size}, got {q}")
    circle = np.column_stack([np.cos(theta), np.sin(theta)])
    return kmeans(circle, q, seed)


def kmeans(
    points: np.ndarray,
    k: int,
    seed: int,
    n_restarts: int = 10,
    max_iter: int = 300,
    tol: float = 1e-6,
) -> np.ndarray:
    """Lloyd k-means with k-means++ seeding, best of ``n_restarts`` by WCSS.

    Deterministic for a fixed seed.  A cluster emptied during iteration is
    re-seeded at the point farthest from its assigned centroid.
    """
    x = np.asarray(points, dtype=float)
    if x.ndim != 2:
        raise ParameterError("points must form an n x d array")
    n = x.shape[0]
    if not 1 <= k <= n:
        raise ParameterError(f"k must be between 1 and {n}, got {k}")
    rng = np.random.default_rng(seed)
    best_labels = None
    best_wcss = np.inf
    for _ in range(n_restarts):
        centers = _kmeans_pp(x, k, rng)
        labels, _, history = _lloyd(x, centers, max_iter, tol)
        if history[-1] < best_wcss:
            best_wcss = history[-1]
            best_labels = labels
    return best_labels


def _kmeans_pp(x: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    """k-means++ seeding: spread initial centers by squared-distance sampling."""
    n = x.shape[0]
    centers = np.empty((k, x.shape[1]))
    centers[0] = x[rng.integers(n)]
    d2 = ((x - centers[0]) ** 2).sum(axis=1)
    for j in range(1, k):
        total = d2.sum()
        if total > 0.0:
            idx = rng.choice(n, p=d2 / total)
        else:
            idx = int(rng.integers(n))
        centers[j] = x[idx]
        d2 = np.minimum(d2, ((x - centers[j]) ** 2).sum(axis=1))
    return centers


def _lloyd(x: np.ndarray, centers: np.ndarray, max_iter: int, tol: float):
    """Lloyd iterations; returns (labels, centers, per-iteration WCSS)."""
    k = centers.shape[0]
    centers = centers.copy()
    history = []
    labels = np.zeros(x.shape[0], dtype=int)
    for _ in range(max_iter):
        d2 = ((x[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        labels = d2.argmin(axis=1)
        for c in range(k):
            if not (labels == c).any():
                assigned = d2[np.arange(x.shape[0]), labels]
                far = int(assigned.argmax())
                centers[c] = x[far]
                d2[:, c] = ((x - centers[c]) ** 2).sum(axis=1)
                labels = d2.argmin(axis=1)
        history.append(float(d2[np.arange(x.shape[0]), labels].sum()))
        new_centers = centers.copy()
        for c in range(k):
            members = labels == c
            if members.any():
                new_centers[c] = x[members].mean(axis=0)
        shift = np.sqrt(((new_centers - centers) ** 2).sum(axis=1)).max()
        centers = new_centers
        if shift <= tol:
            break
    return labels, centers, history

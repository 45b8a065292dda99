"""End-to-end pipelines gluing the graph, spectral, transport, and ensemble stages."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensemble import LabelMatrix, PartitionTally, consensus_matrix, majority_partition, run_qtc
from .errors import ParameterError
from .graph import GraphBundle, PointSet, gaussian_adjacency, laplacians, pairwise_distances, quantile_proximity
from .kernels import spectral_cluster
from .spectral import EigenSystem, GapReport, eigendecompose, gap_stats
from .transport import LaplaceParams, select_s

SUMMARIES = ("majority", "consensus", "both")


@dataclass(frozen=True)
class QTCResult:
    """Everything one clustering run produced, for reporting and reuse."""

    labels: np.ndarray | None
    tally: PartitionTally | None
    consensus: np.ndarray | None
    omega: LabelMatrix
    graph: GraphBundle
    eig: EigenSystem
    gaps: GapReport
    s: float


def build_graph(points: PointSet, eps: float | None, r_eps: float | None = None) -> GraphBundle:
    """Similarity graph from either a quantile fraction or an explicit bandwidth."""
    dist = pairwise_distances(points)
    if r_eps is None:
        if eps is None:
            raise ParameterError("either eps or r_eps is required")
        r_eps = quantile_proximity(dist, eps)
    return laplacians(gaussian_adjacency(dist, r_eps), proximity=r_eps)


def qtc(
    points: PointSet,
    eps: float | None,
    q: int,
    laplace: LaplaceParams = LaplaceParams(),
    m_prime: int | None = None,
    label_method: str = "circle",
    seed: int = 0,
    summary: str = "both",
    r_eps: float | None = None,
) -> QTCResult:
    """Full quantum transport clustering of a point set."""
    if summary not in SUMMARIES:
        raise ParameterError(f"summary must be one of {SUMMARIES}, got {summary!r}")
    graph = build_graph(points, eps, r_eps)
    eig = eigendecompose(graph.hamiltonian)
    gaps = gap_stats(eig, max(q, 2))
    s = select_s(gaps, laplace)
    omega = run_qtc(eig, s, q, m_prime=m_prime, seed=seed, method=label_method)
    labels = tally = consensus = None
    if summary in ("majority", "both"):
        labels, tally = majority_partition(omega, q)
    if summary in ("consensus", "both"):
        consensus = consensus_matrix(omega)
    return QTCResult(
        labels=labels,
        tally=tally,
        consensus=consensus,
        omega=omega,
        graph=graph,
        eig=eig,
        gaps=gaps,
        s=s,
    )


def spectral_baseline(
    points: PointSet,
    eps: float,
    q: int,
    seed: int = 0,
    normalization: str = "approach1",
) -> np.ndarray:
    """Spectral clustering on the same Gaussian similarity graph."""
    graph = build_graph(points, eps)
    eig = eigendecompose(graph.hamiltonian)
    return spectral_cluster(eig, q, seed=seed, normalization=normalization)

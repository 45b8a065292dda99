"""Quantum transport clustering on similarity networks.

Points become a Gaussian similarity graph; the symmetric degree-normalized
Laplacian drives a damped quantum walk whose Laplace-transformed phases are
nearly constant inside communities.  An ensemble over start nodes votes the
phases into labels, and a tight-binding projection supplies closed-form
phase predictions to validate against.
"""

from .datasets import (
    ari,
    gen_annuli,
    gen_gaussian_clouds,
    gen_sticks,
    gen_tetrahedron,
    load_timeseries,
    radius_proportional_counts,
)
from .ensemble import (
    LabelMatrix,
    PartitionTally,
    canonical_relabel,
    consensus_matrix,
    majority_partition,
    partitions_equivalent,
    run_qtc,
)
from .errors import (
    ConsistencyError,
    DegenerateGapError,
    InputError,
    InvalidBlockError,
    IsolatedNodeError,
    NumericError,
    ParameterError,
    QTClustError,
)
from .graph import (
    GraphBundle,
    PointSet,
    gaussian_adjacency,
    laplacians,
    pairwise_distances,
    quantile_proximity,
    similarity_graph,
)
from .kernels import (
    EmbeddingMatrix,
    embedding_distance,
    jsd_matrix,
    laplace_similarity,
    spectral_cluster,
    spectral_embedding,
    transition_kernel,
    two_cluster_outlier_distances,
)
from .labeling import (
    FragmentationWarning,
    kmeans,
    labels_circle_clustering,
    labels_direct_difference,
)
from .pipeline import QTCResult, build_graph, qtc, spectral_baseline
from .spectral import EigenSystem, GapReport, count_low_energy, eigendecompose, gap_stats
from .theory import (
    ClusterOrbitals,
    InstantonParams,
    TightBinding,
    born_expansion,
    cluster_orbitals,
    instanton_phases,
    predicted_phases,
    resolvent_exact,
    tight_binding,
    two_level_phases,
)
from .transport import LaplaceParams, WavePhaseField, laplace_wavefunction, phase_field, select_s

__version__ = "0.1.0"

__all__ = [
    "ari",
    "born_expansion",
    "build_graph",
    "canonical_relabel",
    "ClusterOrbitals",
    "cluster_orbitals",
    "ConsistencyError",
    "consensus_matrix",
    "count_low_energy",
    "DegenerateGapError",
    "EigenSystem",
    "eigendecompose",
    "EmbeddingMatrix",
    "embedding_distance",
    "FragmentationWarning",
    "GapReport",
    "gap_stats",
    "gaussian_adjacency",
    "gen_annuli",
    "gen_gaussian_clouds",
    "gen_sticks",
    "gen_tetrahedron",
    "GraphBundle",
    "InputError",
    "InstantonParams",
    "instanton_phases",
    "InvalidBlockError",
    "IsolatedNodeError",
    "jsd_matrix",
    "kmeans",
    "LabelMatrix",
    "labels_circle_clustering",
    "labels_direct_difference",
    "laplace_similarity",
    "laplace_wavefunction",
    "LaplaceParams",
    "laplacians",
    "load_timeseries",
    "majority_partition",
    "NumericError",
    "pairwise_distances",
    "ParameterError",
    "PartitionTally",
    "partitions_equivalent",
    "phase_field",
    "PointSet",
    "predicted_phases",
    "QTClustError",
    "QTCResult",
    "qtc",
    "quantile_proximity",
    "radius_proportional_counts",
    "resolvent_exact",
    "run_qtc",
    "select_s",
    "similarity_graph",
    "spectral_baseline",
    "spectral_cluster",
    "spectral_embedding",
    "TightBinding",
    "tight_binding",
    "transition_kernel",
    "two_cluster_outlier_distances",
    "two_level_phases",
    "WavePhaseField",
]

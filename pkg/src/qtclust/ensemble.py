"""Run transport from many start nodes and summarize the label ensemble."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ParameterError
from .graph import _readonly
from .labeling import labels_circle_clustering, labels_direct_difference
from .spectral import EigenSystem
from .transport import laplace_wavefunction

# sqrt of two primes: irrational, linearly independent over the rationals, so
# integer label pairs map to distinct fingerprints
_SQRT_P = (math.sqrt(2.0), math.sqrt(3.0))
_XI_TOL = 1e-6

LABEL_METHODS = ("circle", "diff")


@dataclass(frozen=True)
class LabelMatrix:
    """Per-initialization labels: column k labels every node from start node k."""

    omega: np.ndarray
    init_nodes: np.ndarray

    def __post_init__(self):
        om = np.asarray(self.omega, dtype=int)
        init = np.asarray(self.init_nodes, dtype=int)
        if om.ndim != 2 or init.shape != (om.shape[1],):
            raise ParameterError("omega must be m x m' with one init node per column")
        if np.unique(init).size != init.size:
            raise ParameterError("init nodes must be distinct")
        object.__setattr__(self, "omega", _readonly(om))
        object.__setattr__(self, "init_nodes", _readonly(init))

    @property
    def m(self) -> int:
        return self.omega.shape[0]

    @property
    def n_init(self) -> int:
        return self.omega.shape[1]


@dataclass(frozen=True)
class PartitionTally:
    """Equivalence classes of ensemble columns and their vote weights."""

    classes: dict
    weights: dict


def canonical_relabel(labels: np.ndarray) -> np.ndarray:
    """Rename labels to 0,1,... in order of first appearance."""
    lab = np.asarray(labels, dtype=int)
    _, first, inverse = np.unique(lab, return_index=True, return_inverse=True)
    rank = np.argsort(np.argsort(first))
    return rank[inverse]


def partitions_equivalent(col_a: np.ndarray, col_b: np.ndarray, q: int) -> bool:
    """True iff the two label vectors agree up to a renaming of labels.

    Decided by canonical relabeling, and cross-checked against the sqrt-prime
    fingerprint xi_i = a_i sqrt(2) + b_i sqrt(3): the columns are equivalent
    exactly when the number of distinct fingerprints matches the number of
    distinct labels in each column.  A disagreement between the two routes
    indicates a float-tolerance failure and raises.
    """
    a = np.asarray(col_a, dtype=int)
    b = np.asarray(col_b, dtype=int)
    if a.ndim != 1 or a.shape != b.shape:
        raise ParameterError("label vectors must be one-dimensional and equally long")
    if q < 1 or min(a.min(), b.min()) < 0 or max(a.max(), b.max()) >= q:
        raise ParameterError(f"labels must lie in [0, {q})")
    exact = bool(np.array_equal(canonical_relabel(a), canonical_relabel(b)))
    xi = np.sort(a * _SQRT_P[0] + b * _SQRT_P[1])
    distinct = 1 + int(np.count_nonzero(np.diff(xi) > _XI_TOL))
    fingerprint = distinct == np.unique(a).size == np.unique(b).size
    if fingerprint != exact:
        raise ConsistencyError(
            "sqrt-prime fingerprint disagrees with canonical relabeling; "
            "float tolerance failure in the equivalence test"
        )
    return exact


def run_qtc(
    eig: EigenSystem,
    s: float,
    q: int,
    m_prime: int | None = None,
    seed: int = 0,
    method: str = "circle",
) -> LabelMatrix:
    """Label the graph once per sampled start node.

    Start nodes are drawn uniformly without replacement.  Column k holds the
    labels derived from the phase field of the wave function started at
    ``init_nodes[k]``.  Fully deterministic for a fixed seed.
    """
    m = eig.size
    if m_prime is None:
        m_prime = min(m, 100)
    if not 1 <= m_prime <= m:
        raise ParameterError(f"m_prime must be between 1 and {m}, got {m_prime}")
    if not 1 <= q <= m:
        raise ParameterError(f"q must be between 1 and {m}, got {q}")
    if method not in LABEL_METHODS:
        raise ParameterError(f"method must be one of {LABEL_METHODS}, got {method!r}")
    rng = np.random.default_rng(seed)
    init_nodes = rng.choice(m, size=m_prime, replace=False)
    col_seeds = rng.integers(0, 2**63 - 1, size=m_prime)
    omega = np.empty((m, m_prime), dtype=int)
    for k in range(m_prime):
        wave = laplace_wavefunction(eig, int(init_nodes[k]), s)
        if method == "circle":
            omega[:, k] = labels_circle_clustering(wave.phases, q, int(col_seeds[k]))
        else:
            omega[:, k] = labels_direct_difference(wave.phases, q)
    return LabelMatrix(omega=omega, init_nodes=init_nodes)


def majority_partition(omega: LabelMatrix, q: int):
    """Group equivalent columns and return the heaviest partition plus tally.

    Returns the canonical relabeling of a column from the heaviest class and
    a PartitionTally keyed by each class's first (lowest) column index.
    Weight ties go to the class with the lowest representative index.
    """
    cols = omega.omega
    m_prime = omega.n_init
    reps: list[int] = []
    members: dict[int, list[int]] = {}
    for k in range(m_prime):
        for rep in reps:
            if partitions_equivalent(cols[:, rep], cols[:, k], q):
                members[rep].append(k)
                break
        else:
            reps.append(k)
            members[k] = [k]
    weights = {rep: len(group) / m_prime for rep, group in members.items()}
    winner = max(reps, key=lambda rep: (weights[rep], -rep))
    tally = PartitionTally(
        classes={rep: tuple(group) for rep, group in members.items()},
        weights=weights,
    )
    return canonical_relabel(cols[:, winner]), tally


def consensus_matrix(omega: LabelMatrix) -> np.ndarray:
    """Fraction of initializations assigning each node pair the same label."""
    cols = omega.omega
    m, m_prime = cols.shape
    counts = np.zeros((m, m), dtype=np.int64)
    for k in range(m_prime):
        col = cols[:, k]
        counts += col[:, None] == col[None, :]
    return counts / float(m_prime)

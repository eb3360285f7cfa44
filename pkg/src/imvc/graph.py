"""Similarity graphs over a view's available instances.

A per-view graph is built in two steps: a Gaussian-kernel k-nearest-neighbor
similarity matrix S (zero diagonal, symmetrized with an elementwise max), and
a fused matrix W = gamma * S + I whose row sums form the degree vector used by
the solver. gamma = 0 turns the graph off: W collapses to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial.distance import cdist, pdist

from .dataset import ViewMatrix, _readonly


@dataclass(frozen=True)
class SimilarityGraph:
    """Symmetric kNN Gaussian similarity matrix with zero diagonal."""

    view_id: int
    s: np.ndarray
    k: int
    sigma: float

    def __post_init__(self):
        s = np.asarray(self.s, dtype=np.float64)
        if s.ndim != 2 or s.shape[0] != s.shape[1]:
            raise ValueError("similarity matrix must be square")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        object.__setattr__(self, "s", _readonly(s))


@dataclass(frozen=True)
class FusedGraph:
    """Fused graph W = gamma * S + I together with its degree vector."""

    view_id: int
    w: np.ndarray
    gamma: float
    degree: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "w", _readonly(np.asarray(self.w, dtype=np.float64)))
        object.__setattr__(
            self, "degree", _readonly(np.asarray(self.degree, dtype=np.float64))
        )

    @property
    def n(self) -> int:
        return self.w.shape[0]

    @property
    def is_identity(self) -> bool:
        return self.gamma == 0.0


def auto_sigma(view: ViewMatrix, max_instances: int = 2000) -> float:
    """Median pairwise Euclidean distance between instances (kernel scale).

    Views larger than max_instances are evenly subsampled before taking the
    median, keeping the estimate deterministic.
    """
    pts = view.data.T
    if pts.shape[0] > max_instances:
        idx = np.linspace(0, pts.shape[0] - 1, max_instances).astype(np.int64)
        pts = pts[idx]
    if pts.shape[0] < 2:
        raise ValueError("auto sigma needs at least two instances")
    sigma = float(np.median(pdist(pts)))
    if sigma == 0.0:
        raise ValueError(
            f"view {view.view_id}: degenerate sigma (median pairwise distance is "
            "zero; are the instances all identical?)"
        )
    return sigma


def gaussian_knn_graph(
    view: ViewMatrix, k: int = 5, sigma: Optional[float] = None
) -> SimilarityGraph:
    """Gaussian-kernel similarity restricted to k-nearest-neighbor pairs.

    s[i, j] = exp(-||x_i - x_j||^2 / (2 sigma^2)) whenever j is among the k
    nearest neighbors of i or vice versa, 0 elsewhere; the diagonal is 0.
    sigma=None picks the median pairwise distance (auto_sigma).
    """
    n = view.n_available
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n_available={n}, got {k}")
    if sigma is None:
        sigma = auto_sigma(view)
    elif sigma <= 0:
        raise ValueError("sigma must be positive")

    pts = view.data.T
    sq = cdist(pts, pts, metric="sqeuclidean")
    np.fill_diagonal(sq, np.inf)  # never pick yourself as a neighbor
    neighbors = np.argpartition(sq, k - 1, axis=1)[:, :k]

    kernel = np.exp(-sq / (2.0 * sigma * sigma))
    mask = np.zeros((n, n), dtype=bool)
    rows = np.repeat(np.arange(n), k)
    mask[rows, neighbors.reshape(-1)] = True
    s = np.where(mask, kernel, 0.0)
    s = np.maximum(s, s.T)
    np.fill_diagonal(s, 0.0)
    return SimilarityGraph(view_id=view.view_id, s=s, k=k, sigma=float(sigma))


def fuse_graph(sim: SimilarityGraph, gamma: float = 1.0) -> FusedGraph:
    """Fuse a similarity graph with the identity: W = gamma * S + I."""
    if gamma < 0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    w = gamma * sim.s + np.eye(sim.s.shape[0])
    return FusedGraph(view_id=sim.view_id, w=w, gamma=float(gamma), degree=w.sum(axis=1))


def identity_fused_graph(n: int, view_id: int = 0) -> FusedGraph:
    """The graph-off fused graph: W = I, unit degrees."""
    return FusedGraph(view_id=view_id, w=np.eye(n), gamma=0.0, degree=np.ones(n))


def build_fused_graphs(ds, k: int = 5, gamma: float = 1.0, sigma: Optional[float] = None):
    """Per-view fused graphs for a dataset (sigma=None: auto per view)."""
    return tuple(fuse_graph(gaussian_knn_graph(v, k=k, sigma=sigma), gamma) for v in ds.views)


def dump_graph(fused: FusedGraph, path) -> None:
    """Debug dump of the fused matrix as CSV (round-trips in full precision)."""
    np.savetxt(path, fused.w, delimiter=",", fmt="%.17e")

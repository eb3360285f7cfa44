"""Cluster the consensus representation and score the result.

kmeans runs restarted Lloyd iterations with k-means++ seeding on the columns
of the representation. accuracy uses the optimal one-to-one cluster-to-class
assignment, nmi normalizes mutual information by the geometric mean of the two
entropies, and purity is the majority-class fraction per predicted cluster.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.spatial.distance import cdist


@dataclass(frozen=True)
class ClusteringResult:
    predicted: np.ndarray
    acc: float
    nmi: float
    purity: float
    kmeans_inertia: float
    restarts_used: int

    def as_dict(self) -> dict:
        """Flat JSON-ready score summary (labels excluded)."""
        return {
            "acc": self.acc,
            "nmi": self.nmi,
            "purity": self.purity,
            "kmeans_inertia": self.kmeans_inertia,
            "restarts_used": self.restarts_used,
        }


def _check_labels(true_labels, predicted) -> tuple[np.ndarray, np.ndarray]:
    t = np.asarray(true_labels, dtype=np.int64)
    p = np.asarray(predicted, dtype=np.int64)
    if t.shape != p.shape or t.ndim != 1:
        raise ValueError(f"label vectors must be 1-D and equally long, got {t.shape} and {p.shape}")
    if t.size == 0:
        raise ValueError("label vectors must be non-empty")
    if t.min() < 0 or p.min() < 0:
        raise ValueError("labels must be non-negative integers")
    return t, p


def _contingency(t: np.ndarray, p: np.ndarray) -> np.ndarray:
    table = np.zeros((t.max() + 1, p.max() + 1), dtype=np.int64)
    np.add.at(table, (t, p), 1)
    return table


def accuracy(true_labels, predicted) -> float:
    """Fraction correct under the best one-to-one cluster-to-class map."""
    t, p = _check_labels(true_labels, predicted)
    table = _contingency(t, p)
    rows, cols = linear_sum_assignment(table, maximize=True)
    return int(table[rows, cols].sum()) / t.size


def nmi(true_labels, predicted) -> float:
    """Mutual information over the geometric mean of the two entropies.

    Returns 1.0 when both partitions are a single cluster and 0.0 when exactly
    one of them is (no information to share).
    """
    t, p = _check_labels(true_labels, predicted)
    table = _contingency(t, p)
    n = t.size
    row = table.sum(axis=1)
    col = table.sum(axis=0)
    # serial accumulation keeps the arithmetic reproducible term by term
    h_t = 0.0
    for a in row:
        if a > 0:
            h_t -= (a / n) * math.log(a / n)
    h_p = 0.0
    for b in col:
        if b > 0:
            h_p -= (b / n) * math.log(b / n)
    if h_t == 0.0 and h_p == 0.0:
        return 1.0
    if h_t == 0.0 or h_p == 0.0:
        return 0.0
    info = 0.0
    for i in range(table.shape[0]):
        for j in range(table.shape[1]):
            nij = table[i, j]
            if nij > 0:
                info += (nij / n) * math.log(n * nij / (row[i] * col[j]))
    return float(min(max(info / math.sqrt(h_t * h_p), 0.0), 1.0))


def purity(true_labels, predicted) -> float:
    """Mean over predicted clusters of the majority true-class count."""
    t, p = _check_labels(true_labels, predicted)
    table = _contingency(t, p)
    return int(table.max(axis=0).sum()) / t.size


def _kmeans_pp_init(pts: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = pts.shape[0]
    centers = np.empty((k, pts.shape[1]))
    centers[0] = pts[rng.integers(n)]
    closest = np.full(n, np.inf)
    for i in range(1, k):
        d = np.sum((pts - centers[i - 1]) ** 2, axis=1)
        closest = np.minimum(closest, d)
        total = closest.sum()
        if total > 0:
            idx = rng.choice(n, p=closest / total)
        else:  # all remaining points coincide with a chosen center
            idx = rng.integers(n)
        centers[i] = pts[idx]
    return centers


def _lloyd(
    pts: np.ndarray,
    k: int,
    rng: np.random.Generator,
    max_iter: int,
    history: Optional[list] = None,
) -> tuple[np.ndarray, float]:
    centers = _kmeans_pp_init(pts, k, rng)
    labels = np.full(pts.shape[0], -1)
    for _ in range(max_iter):
        dist = cdist(pts, centers, metric="sqeuclidean")
        new_labels = dist.argmin(axis=1)
        point_cost = dist[np.arange(pts.shape[0]), new_labels]
        if history is not None:
            history.append(float(point_cost.sum()))
        empty = np.setdiff1d(np.arange(k), new_labels)
        if empty.size:
            # deterministic repair: relocate to the currently worst-fit points
            farthest = np.argsort(point_cost)[::-1]
            for slot, cluster in enumerate(empty):
                centers[cluster] = pts[farthest[slot]]
            continue
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
        for cluster in range(k):
            centers[cluster] = pts[labels == cluster].mean(axis=0)
    dist = cdist(pts, centers, metric="sqeuclidean")
    labels = dist.argmin(axis=1)
    inertia = float(dist[np.arange(pts.shape[0]), labels].sum())
    return labels, inertia


def _best_kmeans(
    representation: np.ndarray, k: int, restarts: int, seed: int, max_iter: int
) -> tuple[np.ndarray, float]:
    pts = np.ascontiguousarray(representation.T, dtype=np.float64)
    if not np.all(np.isfinite(pts)):
        raise ValueError("representation contains non-finite values")
    if not 1 <= k <= pts.shape[0]:
        raise ValueError(f"k must satisfy 1 <= k <= n={pts.shape[0]}, got {k}")
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    children = np.random.SeedSequence(seed).spawn(restarts)
    best_labels, best_inertia = None, np.inf
    for child in children:
        labels, inertia = _lloyd(pts, k, np.random.default_rng(child), max_iter)
        if inertia < best_inertia:
            best_labels, best_inertia = labels, inertia
    return best_labels, best_inertia


def kmeans(
    representation: np.ndarray,
    k: int,
    restarts: int = 20,
    seed: int = 0,
    max_iter: int = 300,
) -> np.ndarray:
    """Cluster the columns of a (dim x n) representation into k groups.

    Best of `restarts` seeded k-means++ runs by inertia; empty clusters are
    re-seeded from the points farthest from their centroids.
    """
    labels, _ = _best_kmeans(representation, k, restarts, seed, max_iter)
    return labels


def evaluate_clustering(
    representation: np.ndarray,
    true_labels,
    k: Optional[int] = None,
    restarts: int = 20,
    seed: int = 0,
    max_iter: int = 300,
) -> ClusteringResult:
    """k-means on the representation columns plus acc/nmi/purity scores."""
    t = np.asarray(true_labels, dtype=np.int64)
    if k is None:
        k = int(t.max()) + 1
    labels, inertia = _best_kmeans(representation, k, restarts, seed, max_iter)
    return ClusteringResult(
        predicted=labels,
        acc=accuracy(t, labels),
        nmi=nmi(t, labels),
        purity=purity(t, labels),
        kmeans_inertia=inertia,
        restarts_used=restarts,
    )

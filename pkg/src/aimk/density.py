"""Threshold-connected graph and per-vertex densities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# keeps the fractional density term strictly below 1 and the division
# defined when a degree class has a single mean-distance value
EPSILON = 1e-10


@dataclass
class Tcg:
    """Graph joining every point pair within distance ``thr``."""

    adjacency: np.ndarray  # (n, n) bool, symmetric, zero diagonal
    thr: float

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def neighbors(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[i])

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(np.int64)


@dataclass
class DensityProfile:
    """Per-vertex neighbor counts, mean neighbor distances, and densities."""

    degree_k: np.ndarray                         # (n,) int64
    mean_dist: np.ndarray                        # (n,) float64, 0 for isolated
    class_extrema: dict[int, tuple[float, float]]  # k -> (max, min) mean dist
    rho: np.ndarray                              # (n,) float64
    epsilon: float = EPSILON


def build_tcg(dist: np.ndarray, thr: float) -> Tcg:
    """Connect every pair at distance <= thr (no self loops)."""
    if thr < 0:
        raise ValueError(f"threshold must be >= 0, got {thr}")
    adjacency = dist <= thr
    np.fill_diagonal(adjacency, False)
    return Tcg(adjacency, float(thr))


def densities(tcg: Tcg, dist: np.ndarray) -> DensityProfile:
    """Density of each vertex in the threshold-connected graph.

    A vertex with k neighbors gets density k plus a fractional bonus in
    [0, 1) that is larger the smaller its mean neighbor distance is within
    its own degree class; isolated vertices get density 0.
    """
    if tcg.n != dist.shape[0]:
        raise ValueError("graph and distance matrix size mismatch")
    k = tcg.degrees()
    sums = np.einsum("ij,ij->i", dist, tcg.adjacency.astype(np.float64))
    mean_dist = np.where(k > 0, sums / np.maximum(k, 1), 0.0)

    rho = np.zeros(tcg.n)
    class_extrema: dict[int, tuple[float, float]] = {}
    for kv in np.unique(k[k > 0]):
        members = k == kv
        d = mean_dist[members]
        dmax, dmin = float(d.max()), float(d.min())
        class_extrema[int(kv)] = (dmax, dmin)
        rho[members] = kv + (dmax - d) / (dmax - dmin + EPSILON)
    return DensityProfile(k, mean_dist, class_extrema, rho)

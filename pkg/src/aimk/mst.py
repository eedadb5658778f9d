"""Minimum spanning tree, skeleton points, and the density threshold.

The MST is built over the complete Euclidean graph of the dataset, so the
distance matrix is materialized (O(n^2) memory); large inputs are expected
to go through the sampled seeding variant instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from aimk import backend, counters
from aimk.data import Dataset

THRESHOLD_MODES = ("min", "mean", "max")


@dataclass
class Mst:
    """Spanning tree as parallel edge arrays in insertion order."""

    edges: np.ndarray    # (n-1, 2) int64, edges[k] = (u, v) with u added first
    weights: np.ndarray  # (n-1,) float64
    degree: np.ndarray   # (n,) int64

    @property
    def n(self) -> int:
        return self.degree.shape[0]

    @property
    def max_degree(self) -> int:
        return int(self.degree.max())

    @property
    def total_weight(self) -> float:
        return float(self.weights.sum())

    def adjacent_weights(self, vertex: int) -> np.ndarray:
        mask = (self.edges[:, 0] == vertex) | (self.edges[:, 1] == vertex)
        return self.weights[mask]


@dataclass
class SkeletonResult:
    """Degree partition of an MST and the skeleton vertices derived from it."""

    degree_sets: dict[int, np.ndarray]   # occupied degree -> sorted vertex ids
    adjacency_counts: dict[int, int]     # occupied degree -> f value
    chosen_degree: int
    skeleton: np.ndarray                 # sorted vertex ids with degree >= chosen
    max_adjacent_weights: np.ndarray     # aligned with ``skeleton``
    threshold: float | None = None

    @property
    def skeleton_size(self) -> int:
        return self.skeleton.shape[0]


def pairwise_distances(data) -> np.ndarray:
    """Symmetric matrix of Euclidean distances between all point pairs."""
    pts = data.points if isinstance(data, Dataset) else np.ascontiguousarray(
        np.asarray(data, dtype=np.float64)
    )
    n = pts.shape[0]
    if n < 2:
        raise ValueError("need at least 2 points for pairwise distances")
    counters.add(n * (n - 1) // 2)
    return backend.pairwise_dists(pts)


def prim_mst(dist: np.ndarray) -> Mst:
    """Minimum spanning tree of a dense distance matrix.

    Deterministic: rooted at vertex 0, ties resolved by the lowest
    (tree vertex, outside vertex) index pair.
    """
    dist = np.ascontiguousarray(dist, dtype=np.float64)
    if dist.ndim != 2 or dist.shape[0] != dist.shape[1]:
        raise ValueError("distance matrix must be square")
    n = dist.shape[0]
    if n < 2:
        raise ValueError("need at least 2 vertices")
    us, vs, ws = backend.prim_mst(dist)
    edges = np.stack([us, vs], axis=1)
    degree = np.bincount(edges.ravel(), minlength=n).astype(np.int64)
    return Mst(edges, ws, degree)


def _neighbor_lists(tree: Mst) -> list[np.ndarray]:
    nbrs: list[list[int]] = [[] for _ in range(tree.n)]
    for u, v in tree.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return [np.array(a, dtype=np.int64) for a in nbrs]


def skeleton_points(tree: Mst) -> SkeletonResult:
    """Partition vertices by degree and extract the skeleton set.

    For each occupied degree i, the adjacency count f_i is the number of
    vertices outside the class that touch at least one class member, each
    counted once. The chosen degree maximizes f_i, ties going to the larger
    degree; the skeleton is every vertex of at least that degree.
    """
    n = tree.n
    degree = tree.degree
    nbrs = _neighbor_lists(tree)

    degree_sets: dict[int, np.ndarray] = {}
    adjacency_counts: dict[int, int] = {}
    for deg in np.unique(degree):
        deg = int(deg)
        members = np.flatnonzero(degree == deg)
        degree_sets[deg] = members
        if members.size == n:
            # a degree class covering every vertex (only the 2-vertex path):
            # the complement is empty and the class counts itself
            adjacency_counts[deg] = int(members.size)
            continue
        touched = np.zeros(n, dtype=bool)
        for u in members:
            touched[nbrs[u]] = True
        touched[members] = False
        adjacency_counts[deg] = int(touched.sum())

    chosen = max(adjacency_counts, key=lambda deg: (adjacency_counts[deg], deg))
    skeleton = np.flatnonzero(degree >= chosen).astype(np.int64)

    max_w = np.full(n, -np.inf)
    np.maximum.at(max_w, tree.edges[:, 0], tree.weights)
    np.maximum.at(max_w, tree.edges[:, 1], tree.weights)

    return SkeletonResult(
        degree_sets=degree_sets,
        adjacency_counts=adjacency_counts,
        chosen_degree=chosen,
        skeleton=skeleton,
        max_adjacent_weights=max_w[skeleton],
    )


def threshold(tree: Mst, skel: SkeletonResult, mode: str = "max") -> float:
    """Neighborhood radius: mean over skeleton vertices of their adjacent
    MST edge weights aggregated per vertex by ``mode`` (max by default)."""
    if mode not in THRESHOLD_MODES:
        raise ValueError(f"mode must be one of {THRESHOLD_MODES}, got {mode!r}")
    assert skel.skeleton_size >= 1, "skeleton cannot be empty for a valid tree"

    n = tree.n
    if mode == "max":
        agg = np.full(n, -np.inf)
        np.maximum.at(agg, tree.edges[:, 0], tree.weights)
        np.maximum.at(agg, tree.edges[:, 1], tree.weights)
    elif mode == "min":
        agg = np.full(n, np.inf)
        np.minimum.at(agg, tree.edges[:, 0], tree.weights)
        np.minimum.at(agg, tree.edges[:, 1], tree.weights)
    else:
        sums = np.zeros(n)
        np.add.at(sums, tree.edges[:, 0], tree.weights)
        np.add.at(sums, tree.edges[:, 1], tree.weights)
        agg = sums / tree.degree
    return float(agg[skel.skeleton].mean())


def write_edge_list(tree: Mst, path) -> None:
    """Debug dump: one "u v weight" line per MST edge, in insertion order."""
    with open(path, "w") as fh:
        for (u, v), w in zip(tree.edges, tree.weights):
            fh.write(f"{u} {v} {float(w)!r}\n")

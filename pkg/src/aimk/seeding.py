"""Initial cluster center selection.

``aimk_seeds`` is the deterministic hybrid-distance seeder: the first
center is the global density maximum, every later one maximizes the
minimum hybrid distance to the centers chosen so far. ``aimk_rs_seeds``
runs the same procedure on a sqrt(n) uniform sample, which drops the total
cost from quadratic to linear in n. Forgy, k-means++, and maximin
baselines share the same SeedSet output type.

All argmax/argmin ties break toward the lowest vertex index, which makes
the deterministic seeders reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from aimk import counters
from aimk.data import Dataset, random_sample, sqrt_sample_size
from aimk.density import DensityProfile, Tcg, build_tcg, densities
from aimk.mst import (
    Mst,
    SkeletonResult,
    pairwise_distances,
    prim_mst,
    skeleton_points,
    threshold,
)

SEED_METHODS = ("aimk", "aimk_rs", "forgy", "kmeanspp", "maximin")


@dataclass
class HybridStats:
    """Extreme pairwise distances and density sums over all pairs i != j."""

    d_min: float
    d_max: float
    p_min: float
    p_max: float


@dataclass
class SeedSet:
    """Ordered initial-center indices plus the settings that produced them."""

    center_indices: np.ndarray
    lam: float | None
    method: str

    def __post_init__(self):
        idx = np.asarray(self.center_indices, dtype=np.int64)
        if len(np.unique(idx)) != idx.size:
            raise ValueError("seed indices must be distinct")
        self.center_indices = idx

    @property
    def nc(self) -> int:
        return self.center_indices.size


@dataclass
class AimkPipeline:
    """Everything the hybrid-distance seeder needs that does not depend on
    the mixing weight: distances, tree, skeleton, threshold, densities."""

    dist: np.ndarray
    tree: Mst
    skeleton: SkeletonResult
    thr: float
    tcg: Tcg
    profile: DensityProfile
    stats: HybridStats
    thr_mode: str


def hybrid_stats(dist: np.ndarray, rho: np.ndarray) -> HybridStats:
    n = dist.shape[0]
    d_min = float(np.where(np.eye(n, dtype=bool), np.inf, dist).min())
    d_max = float(dist.max())  # diagonal zeros never exceed an off-diagonal max
    s = np.sort(rho)
    return HybridStats(d_min, d_max, float(s[0] + s[1]), float(s[-1] + s[-2]))


def _norm_sq(value, lo, hi):
    """Squared min-max normalization; a collapsed range contributes 0."""
    if hi == lo:
        return np.zeros_like(np.asarray(value, dtype=np.float64))
    t = (value - lo) / (hi - lo)
    return t * t


def hybrid_distance(
    i: int,
    j: int,
    lam: float,
    profile: DensityProfile,
    dist: np.ndarray,
    stats: HybridStats,
) -> float:
    """Mix of squared normalized distance and squared normalized density sum."""
    if i == j:
        raise ValueError("hybrid distance is defined for distinct vertices")
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    d_term = _norm_sq(dist[i, j], stats.d_min, stats.d_max)
    p_term = _norm_sq(profile.rho[i] + profile.rho[j], stats.p_min, stats.p_max)
    return float(lam * d_term + (1.0 - lam) * p_term)


def _hybrid_to_center(center, lam, rho, dist_row, stats):
    """Hybrid distance from one center to every vertex, vectorized."""
    d_term = _norm_sq(dist_row, stats.d_min, stats.d_max)
    p_term = _norm_sq(rho[center] + rho, stats.p_min, stats.p_max)
    return lam * d_term + (1.0 - lam) * p_term


def prepare_pipeline(data: Dataset, thr_mode: str = "max") -> AimkPipeline:
    """Run the weight-independent stages once: MST, skeleton, threshold,
    densities, and the normalization extrema."""
    dist = pairwise_distances(data)
    tree = prim_mst(dist)
    skel = skeleton_points(tree)
    thr = threshold(tree, skel, thr_mode)
    skel.threshold = thr
    tcg = build_tcg(dist, thr)
    profile = densities(tcg, dist)
    stats = hybrid_stats(dist, profile.rho)
    return AimkPipeline(dist, tree, skel, thr, tcg, profile, stats, thr_mode)


def select_centers(pipe: AimkPipeline, nc: int, lam: float) -> SeedSet:
    """Greedy max-min selection of ``nc`` centers on a prepared pipeline."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    n = pipe.dist.shape[0]
    if not 2 <= nc <= n:
        raise ValueError(f"need 2 <= nc <= {n}, got {nc}")

    rho = pipe.profile.rho
    first = int(np.argmax(rho))
    chosen = [first]
    min_h = _hybrid_to_center(first, lam, rho, pipe.dist[first], pipe.stats)
    min_h[first] = -np.inf
    while len(chosen) < nc:
        nxt = int(np.argmax(min_h))
        chosen.append(nxt)
        if len(chosen) == nc:
            break
        h = _hybrid_to_center(nxt, lam, rho, pipe.dist[nxt], pipe.stats)
        np.minimum(min_h, h, out=min_h)
        min_h[nxt] = -np.inf
    return SeedSet(np.array(chosen, dtype=np.int64), lam, "aimk")


def aimk_seeds(
    data: Dataset, nc: int, lam: float, thr_mode: str = "max"
) -> SeedSet:
    """Deterministic hybrid-distance seeding on the full dataset."""
    return select_centers(prepare_pipeline(data, thr_mode), nc, lam)


def aimk_rs_seeds(
    data: Dataset, nc: int, lam: float, rng_seed: int, thr_mode: str = "max"
) -> SeedSet:
    """Hybrid-distance seeding on a uniform sqrt(n) sample.

    Returns original-dataset indices of the selected sample members; the
    sample pairwise work is (sqrt n)^2, so total cost stays linear in n.
    """
    size = sqrt_sample_size(data.n)
    if size < max(nc, 2):
        raise ValueError(
            f"sqrt(n) sample of {size} points cannot seed {nc} clusters; "
            "use plain aimk for datasets this small"
        )
    sample = random_sample(data, size, rng_seed)
    inner = aimk_seeds(data.subset(sample), nc, lam, thr_mode)
    return SeedSet(sample[inner.center_indices], lam, "aimk_rs")


def _sq_dists_to_point(points: np.ndarray, center: np.ndarray) -> np.ndarray:
    counters.add(points.shape[0])
    diff = points - center
    return np.einsum("ij,ij->i", diff, diff)


def forgy_seeds(data: Dataset, nc: int, rng_seed: int) -> SeedSet:
    """nc distinct indices drawn uniformly at random."""
    if not 1 <= nc <= data.n:
        raise ValueError(f"need 1 <= nc <= {data.n}, got {nc}")
    rng = np.random.default_rng(rng_seed)
    idx = rng.choice(data.n, size=nc, replace=False).astype(np.int64)
    return SeedSet(idx, None, "forgy")


def kmeanspp_seeds(data: Dataset, nc: int, rng_seed: int) -> SeedSet:
    """k-means++: first center uniform, the rest drawn with probability
    proportional to squared distance from the nearest chosen center."""
    if not 1 <= nc <= data.n:
        raise ValueError(f"need 1 <= nc <= {data.n}, got {nc}")
    rng = np.random.default_rng(rng_seed)
    pts = data.points
    first = int(rng.integers(data.n))
    chosen = [first]
    d2 = _sq_dists_to_point(pts, pts[first])
    for _ in range(nc - 1):
        total = float(d2.sum())
        if total <= 0.0:
            raise ValueError(f"fewer than {nc} distinct points")
        # inverse-CDF draw; indices with zero mass can never be hit
        target = rng.random() * total
        nxt = int(np.searchsorted(np.cumsum(d2), target, side="right"))
        nxt = min(nxt, data.n - 1)
        chosen.append(nxt)
        np.minimum(d2, _sq_dists_to_point(pts, pts[nxt]), out=d2)
    return SeedSet(np.array(chosen, dtype=np.int64), None, "kmeanspp")


def maximin_seeds(data: Dataset, nc: int, rng_seed: int) -> SeedSet:
    """First center uniform, each next the point farthest from the chosen
    set (max over points of the min distance to any chosen center)."""
    if not 1 <= nc <= data.n:
        raise ValueError(f"need 1 <= nc <= {data.n}, got {nc}")
    rng = np.random.default_rng(rng_seed)
    pts = data.points
    first = int(rng.integers(data.n))
    chosen = [first]
    min_d = np.sqrt(_sq_dists_to_point(pts, pts[first]))
    min_d[first] = -np.inf
    for _ in range(nc - 1):
        nxt = int(np.argmax(min_d))
        chosen.append(nxt)
        np.minimum(min_d, np.sqrt(_sq_dists_to_point(pts, pts[nxt])), out=min_d)
        min_d[nxt] = -np.inf
    return SeedSet(np.array(chosen, dtype=np.int64), None, "maximin")

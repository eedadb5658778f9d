"""Adaptive MST/density-based initialization for K-means, with baselines,
Lloyd iteration, validation indices, and a benchmark harness."""

__version__ = "0.1.0"

from aimk.data import (
    Dataset,
    MixtureSpec,
    generate_mixture,
    load_csv,
    load_libsvm,
    random_sample,
    save_csv,
)
from aimk.density import DensityProfile, Tcg, build_tcg, densities
from aimk.lloyd import ClusteringResult, lloyd
from aimk.metrics import (
    EvalReport,
    PairCounts,
    accuracy,
    evaluate,
    f_measure,
    pair_counts,
    rand_index,
)
from aimk.mst import (
    Mst,
    SkeletonResult,
    pairwise_distances,
    prim_mst,
    skeleton_points,
    threshold,
)
from aimk.seeding import (
    HybridStats,
    SeedSet,
    aimk_rs_seeds,
    aimk_seeds,
    forgy_seeds,
    hybrid_distance,
    kmeanspp_seeds,
    maximin_seeds,
)

__all__ = [
    "Dataset", "MixtureSpec", "generate_mixture", "load_csv", "load_libsvm",
    "random_sample", "save_csv",
    "Tcg", "DensityProfile", "build_tcg", "densities",
    "ClusteringResult", "lloyd",
    "PairCounts", "EvalReport", "pair_counts", "rand_index", "f_measure",
    "accuracy", "evaluate",
    "Mst", "SkeletonResult", "pairwise_distances", "prim_mst",
    "skeleton_points", "threshold",
    "HybridStats", "SeedSet", "aimk_seeds", "aimk_rs_seeds", "forgy_seeds",
    "kmeanspp_seeds", "maximin_seeds", "hybrid_distance",
]

"""Lloyd's K-means iteration, consuming any SeedSet."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from aimk import backend, counters
from aimk.data import Dataset
from aimk.seeding import SeedSet

DEFAULT_MAX_ITER = 300
DEFAULT_SHIFT_TOL = 1e-9

# slack for the monotonicity assertion: the update steps can only lower the
# objective in exact arithmetic, so anything beyond roundoff is a bug
_SSE_SLACK = 1e-9


@dataclass
class ClusteringResult:
    assignments: np.ndarray
    centroids: np.ndarray
    sse: float
    iterations: int
    converged: bool
    sse_history: list[float] = field(default_factory=list)


def lloyd(
    data: Dataset,
    seeds: SeedSet,
    max_iter: int = DEFAULT_MAX_ITER,
    shift_tol: float = DEFAULT_SHIFT_TOL,
) -> ClusteringResult:
    """Alternate nearest-centroid assignment and centroid-mean update.

    Stops when assignments repeat, every centroid moves less than
    ``shift_tol``, or ``max_iter`` is hit. An emptied cluster is re-seeded
    with the point currently farthest from its own centroid, so the output
    always has the full number of centroids. Deterministic given
    (data, seeds); the per-iteration SSE is recorded and asserted to be
    non-increasing.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if shift_tol < 0:
        raise ValueError("shift_tol must be >= 0")
    nc = seeds.nc
    if nc < 1 or int(seeds.center_indices.max()) >= data.n:
        raise ValueError("seed indices do not fit the dataset")

    pts = data.points
    centroids = pts[seeds.center_indices].copy()
    prev_labels = None
    labels = None
    history: list[float] = []
    converged = False
    iterations = 0

    for _ in range(max_iter):
        iterations += 1
        counters.add(data.n * nc)
        labels, sqd = backend.assign_nearest(pts, centroids)

        counts = np.bincount(labels, minlength=nc)
        for cid in np.flatnonzero(counts == 0):
            far = int(np.argmax(sqd))
            labels[far] = cid
            sqd[far] = -np.inf  # a later empty cluster must take a different point

        new_centroids = np.empty_like(centroids)
        for cid in range(nc):
            new_centroids[cid] = pts[labels == cid].mean(axis=0)

        counters.add(data.n)
        diff = pts - new_centroids[labels]
        sse = float(np.einsum("ij,ij->", diff, diff))
        if history and sse > history[-1] + _SSE_SLACK * max(1.0, history[-1]):
            raise AssertionError(
                f"SSE increased from {history[-1]} to {sse} at iteration {iterations}"
            )
        history.append(sse)

        shift = float(np.sqrt(((new_centroids - centroids) ** 2).sum(axis=1)).max())
        centroids = new_centroids
        if prev_labels is not None and np.array_equal(labels, prev_labels):
            converged = True
            break
        if shift < shift_tol:
            converged = True
            break
        prev_labels = labels

    return ClusteringResult(labels, centroids, history[-1], iterations, converged, history)

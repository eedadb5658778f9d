"""NumPy fallback kernels, used when the compiled extension is unavailable.

Each function mirrors its twin in ``aimk._ckernels`` exactly: feature terms
are accumulated in index order so both backends return bit-identical
results, and the benchmark in ``benchmarks/`` can assert equality.
"""

import numpy as np

BACKEND = "python"


def pairwise_dists(x):
    """Full symmetric Euclidean distance matrix of the rows of ``x``."""
    n, p = x.shape
    acc = np.zeros((n, n), dtype=np.float64)
    for k in range(p):
        diff = x[:, k, None] - x[None, :, k]
        acc += diff * diff
    return np.sqrt(acc, out=acc)


def prim_mst(d):
    """Prim's algorithm on a dense distance matrix, rooted at vertex 0.

    Same deterministic tie rule as the compiled kernel: minimum-weight
    frontier edge, ties broken toward the lexicographically smallest
    (tree vertex, outside vertex) pair.
    """
    n = d.shape[0]
    us = np.empty(n - 1, dtype=np.int64)
    vs = np.empty(n - 1, dtype=np.int64)
    ws = np.empty(n - 1, dtype=np.float64)

    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best_w = d[0].copy()
    best_u = np.zeros(n, dtype=np.int64)

    for step in range(n - 1):
        frontier = np.where(in_tree, np.inf, best_w)
        cand = np.flatnonzero(frontier == frontier.min())
        # secondary key best_u, tertiary key vertex index
        pick = cand[np.lexsort((cand, best_u[cand]))[0]]
        us[step] = best_u[pick]
        vs[step] = pick
        ws[step] = best_w[pick]
        in_tree[pick] = True

        row = d[pick]
        upd = ~in_tree & ((row < best_w) | ((row == best_w) & (pick < best_u)))
        best_w[upd] = row[upd]
        best_u[upd] = pick
    return us, vs, ws


def assign_nearest(x, c):
    """Nearest centroid per point; ties go to the lowest centroid index.

    Returns (labels, squared distance to the assigned centroid).
    """
    n, p = x.shape
    m = c.shape[0]
    d2 = np.empty((n, m), dtype=np.float64)
    for j in range(m):
        acc = np.zeros(n, dtype=np.float64)
        for k in range(p):
            diff = x[:, k] - c[j, k]
            acc += diff * diff
        d2[:, j] = acc
    labels = np.argmin(d2, axis=1)
    return labels.astype(np.int64), d2[np.arange(n), labels]

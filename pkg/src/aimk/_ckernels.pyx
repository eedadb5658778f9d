# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels.

Drop-in twins of :mod:`aimk._pykernels`; both accumulate feature terms in
index order so results are bit-identical across backends.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

BACKEND = "cython"


def pairwise_dists(const double[:, ::1] x):
    """Full symmetric Euclidean distance matrix of the rows of ``x``."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t p = x.shape[1]
    out = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i, j, k
    cdef double acc, diff
    for i in range(n):
        o[i, i] = 0.0
        for j in range(i + 1, n):
            acc = 0.0
            for k in range(p):
                diff = x[i, k] - x[j, k]
                acc += diff * diff
            acc = sqrt(acc)
            o[i, j] = acc
            o[j, i] = acc
    return out


def prim_mst(const double[:, ::1] d):
    """Prim's algorithm on a dense distance matrix, rooted at vertex 0.

    Ties in the minimum-weight frontier edge are broken toward the
    lexicographically smallest (tree vertex, outside vertex) pair, which
    makes the edge list deterministic. Edges are returned in insertion
    order as (us, vs, ws) with ``us[k]`` already in the tree.
    """
    cdef Py_ssize_t n = d.shape[0]
    us = np.empty(n - 1, dtype=np.int64)
    vs = np.empty(n - 1, dtype=np.int64)
    ws = np.empty(n - 1, dtype=np.float64)
    cdef long long[::1] u_out = us
    cdef long long[::1] v_out = vs
    cdef double[::1] w_out = ws

    in_tree_arr = np.zeros(n, dtype=np.uint8)
    best_w_arr = np.empty(n, dtype=np.float64)
    best_u_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.uint8_t[::1] in_tree = in_tree_arr
    cdef double[::1] best_w = best_w_arr
    cdef long long[::1] best_u = best_u_arr

    cdef Py_ssize_t step, v, pick
    cdef double w
    for v in range(n):
        best_w[v] = d[0, v]
    in_tree[0] = 1

    for step in range(n - 1):
        pick = -1
        for v in range(1, n):
            if in_tree[v]:
                continue
            # v ascends, so on a full (w, u) tie the earlier pick wins
            if pick < 0 or best_w[v] < best_w[pick] or (
                best_w[v] == best_w[pick] and best_u[v] < best_u[pick]
            ):
                pick = v
        u_out[step] = best_u[pick]
        v_out[step] = pick
        w_out[step] = best_w[pick]
        in_tree[pick] = 1
        for v in range(1, n):
            if in_tree[v]:
                continue
            w = d[pick, v]
            if w < best_w[v] or (w == best_w[v] and pick < best_u[v]):
                best_w[v] = w
                best_u[v] = pick
    return us, vs, ws


def assign_nearest(const double[:, ::1] x, const double[:, ::1] c):
    """Nearest centroid per point; ties go to the lowest centroid index.

    Returns (labels, squared distance to the assigned centroid).
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t m = c.shape[0]
    cdef Py_ssize_t p = x.shape[1]
    labels = np.empty(n, dtype=np.int64)
    sq = np.empty(n, dtype=np.float64)
    cdef long long[::1] lab = labels
    cdef double[::1] sq_ = sq
    cdef Py_ssize_t i, j, k
    cdef double best, acc, diff
    cdef Py_ssize_t best_j
    for i in range(n):
        best = -1.0
        best_j = 0
        for j in range(m):
            acc = 0.0
            for k in range(p):
                diff = x[i, k] - c[j, k]
                acc += diff * diff
            if best < 0.0 or acc < best:
                best = acc
                best_j = j
        lab[i] = best_j
        sq_[i] = best
    return labels, sq

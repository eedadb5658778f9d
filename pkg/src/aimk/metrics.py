"""External validation indices: ACC, Rand index, and pair-counting F-measure.

Pair counts come from the contingency matrix, so the cost is
O(n + #clusters * #classes) rather than a quadratic pair sweep.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment


@dataclass
class PairCounts:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass
class EvalReport:
    acc: float
    ri: float
    f_measure: float
    precision: float
    recall: float
    mapping: dict


def _contingency(pred, truth):
    pred = np.asarray(pred)
    truth = np.asarray(truth)
    if pred.shape != truth.shape or pred.ndim != 1:
        raise ValueError(
            f"prediction and truth lengths differ: {pred.shape} vs {truth.shape}"
        )
    pred_values, pi = np.unique(pred, return_inverse=True)
    true_values, ti = np.unique(truth, return_inverse=True)
    m = np.zeros((pred_values.size, true_values.size), dtype=np.int64)
    np.add.at(m, (pi, ti), 1)
    return pred_values, true_values, m


def _choose2(a):
    return (a.astype(object) * (a.astype(object) - 1)) // 2


def pair_counts(pred, truth) -> PairCounts:
    """TP/FP/FN/TN over all unordered point pairs.

    Same cluster & same class is a true positive, same cluster & different
    class a false positive, different cluster & same class a false negative,
    and the rest true negatives.
    """
    _, _, m = _contingency(pred, truth)
    n = int(m.sum())
    if n < 2:
        raise ValueError("need at least 2 points to count pairs")
    tp = int(_choose2(m).sum())
    same_cluster = int(_choose2(m.sum(axis=1)).sum())
    same_class = int(_choose2(m.sum(axis=0)).sum())
    total = n * (n - 1) // 2
    fp = same_cluster - tp
    fn = same_class - tp
    return PairCounts(tp, fp, fn, total - same_cluster - fn)


def rand_index(counts: PairCounts) -> float:
    if counts.total <= 0:
        raise ValueError("no pairs to score")
    return (counts.tp + counts.tn) / counts.total


def f_measure(counts: PairCounts) -> tuple[float, float, float]:
    """(precision, recall, F); degenerate denominators score 0 so sweep
    runs never abort on edge cases."""
    precision = counts.tp / (counts.tp + counts.fp) if counts.tp + counts.fp else 0.0
    recall = counts.tp / (counts.tp + counts.fn) if counts.tp + counts.fn else 0.0
    if precision + recall == 0.0:
        return precision, recall, 0.0
    return precision, recall, 2 * precision * recall / (precision + recall)


def accuracy(pred, truth) -> tuple[float, dict]:
    """Fraction correct under the best one-to-one cluster-to-class mapping.

    The mapping maximizes total matched counts over the contingency matrix
    (Hungarian assignment); clusters left unmatched contribute nothing.
    """
    pred_values, true_values, m = _contingency(pred, truth)
    rows, cols = linear_sum_assignment(-m)
    mapping = {pred_values[r]: true_values[c] for r, c in zip(rows, cols)}
    correct = int(m[rows, cols].sum())
    return correct / int(m.sum()), mapping


def evaluate(pred, truth) -> EvalReport:
    """All indices at once for a (prediction, ground truth) pair."""
    counts = pair_counts(pred, truth)
    acc, mapping = accuracy(pred, truth)
    precision, recall, f = f_measure(counts)
    return EvalReport(acc, rand_index(counts), f, precision, recall, mapping)

import numpy as np
import pytest

from aimk.metrics import accuracy, evaluate, f_measure, pair_counts, rand_index
from oracles import accuracy_bruteforce, pair_counts_bruteforce


def random_labelings(rng, n_max=50, k_max=6):
    n = int(rng.integers(2, n_max + 1))
    pred = rng.integers(0, int(rng.integers(1, k_max + 1)), size=n)
    truth = rng.integers(0, int(rng.integers(1, k_max + 1)), size=n)
    return pred, truth


class TestPairCounts:
    def test_documented_example(self):
        counts = pair_counts([0, 0, 0, 1], ["a", "a", "b", "b"])
        assert (counts.tp, counts.fp, counts.fn, counts.tn) == (1, 2, 1, 2)

    def test_perfect_clustering(self):
        counts = pair_counts([0, 1, 0, 2], [0, 1, 0, 2])
        assert counts.fp == 0 and counts.fn == 0

    def test_single_cluster_vs_all_distinct(self):
        n = 6
        counts = pair_counts([0] * n, list(range(n)))
        assert counts.tp == 0 and counts.tn == 0
        assert counts.fp == n * (n - 1) // 2

    def test_total_is_n_choose_2(self):
        rng = np.random.default_rng(61)
        for _ in range(100):
            pred, truth = random_labelings(rng)
            counts = pair_counts(pred, truth)
            n = len(pred)
            assert counts.total == n * (n - 1) // 2

    def test_matches_bruteforce(self):
        rng = np.random.default_rng(62)
        for _ in range(50):
            pred, truth = random_labelings(rng)
            counts = pair_counts(pred, truth)
            assert (counts.tp, counts.fp, counts.fn, counts.tn) == pair_counts_bruteforce(
                pred, truth
            )

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="lengths"):
            pair_counts([0, 1], [0, 1, 2])


class TestRandIndex:
    def test_documented_example(self):
        counts = pair_counts([0, 0, 0, 1], ["a", "a", "b", "b"])
        assert rand_index(counts) == 0.5

    def test_perfect_is_one(self):
        assert rand_index(pair_counts([0, 1, 1], [5, 2, 2])) == 1.0

    def test_invariant_under_relabeling(self):
        rng = np.random.default_rng(63)
        for _ in range(50):
            pred, truth = random_labelings(rng)
            shuffled = (pred + 3) % 7  # injective relabeling of cluster ids
            assert rand_index(pair_counts(pred, truth)) == rand_index(
                pair_counts(shuffled, truth)
            )


class TestFMeasure:
    def test_documented_example(self):
        counts = pair_counts([0, 0, 0, 1], ["a", "a", "b", "b"])
        precision, recall, f = f_measure(counts)
        assert precision == pytest.approx(1 / 3)
        assert recall == pytest.approx(1 / 2)
        assert f == pytest.approx(0.4)

    def test_perfect(self):
        assert f_measure(pair_counts([0, 1, 1], [0, 1, 1])) == (1.0, 1.0, 1.0)

    def test_degenerate_zero(self):
        counts = pair_counts([0] * 3, [0, 1, 2])  # tp=0, fp>0, fn=0
        precision, recall, f = f_measure(counts)
        assert f == 0.0


class TestAccuracy:
    def test_pure_relabeling_is_perfect(self):
        acc, mapping = accuracy([0, 0, 1, 1], ["b", "b", "a", "a"])
        assert acc == 1.0
        assert mapping == {0: "b", 1: "a"}

    def test_documented_example(self):
        acc, mapping = accuracy([0, 0, 0, 1], ["a", "a", "b", "b"])
        assert acc == 0.75
        assert mapping == {0: "a", 1: "b"}

    def test_identity(self):
        pred = [3, 1, 4, 1, 5]
        acc, _ = accuracy(pred, pred)
        assert acc == 1.0

    def test_matches_exhaustive_mapping(self):
        rng = np.random.default_rng(64)
        for _ in range(50):
            pred, truth = random_labelings(rng, n_max=30, k_max=5)
            acc, _ = accuracy(pred, truth)
            assert acc == pytest.approx(accuracy_bruteforce(pred, truth), abs=1e-12)

    def test_more_clusters_than_classes(self):
        acc, mapping = accuracy([0, 1, 2, 3], ["a", "a", "b", "b"])
        assert acc == 0.5
        assert len(mapping) == 2


class TestEvaluate:
    def test_bundles_everything(self):
        report = evaluate([0, 0, 0, 1], ["a", "a", "b", "b"])
        assert report.acc == 0.75
        assert report.ri == 0.5
        assert report.f_measure == pytest.approx(0.4)
        assert 0.0 <= report.precision <= 1.0
        assert 0.0 <= report.recall <= 1.0

    def test_permutation_invariance_of_all_indices(self):
        rng = np.random.default_rng(65)
        for _ in range(30):
            pred, truth = random_labelings(rng)
            r1 = evaluate(pred, truth)
            # permute cluster ids and class ids independently
            r2 = evaluate((pred * 7 + 3) % 11, [f"x{t}" for t in truth])
            assert r1.acc == r2.acc
            assert r1.ri == r2.ri
            assert r1.f_measure == r2.f_measure

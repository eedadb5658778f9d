"""Dataset loading, synthetic generation, and index sampling.

All randomness goes through ``numpy.random.default_rng`` (PCG64), so any
seeded operation is reproducible across runs and platforms.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass
class Dataset:
    """n points in p dimensions plus optional ground-truth labels."""

    points: np.ndarray
    labels: np.ndarray | None = None
    name: str = ""

    def __post_init__(self):
        pts = np.ascontiguousarray(np.asarray(self.points, dtype=np.float64))
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError(f"points must be a non-empty 2-d array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points contain NaN or infinite coordinates")
        self.points = pts
        if self.labels is not None:
            labels = np.asarray(self.labels)
            if labels.shape != (pts.shape[0],):
                raise ValueError(
                    f"expected {pts.shape[0]} labels, got {labels.shape}"
                )
            self.labels = labels

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def p(self) -> int:
        return self.points.shape[1]

    def n_classes(self) -> int:
        if self.labels is None:
            raise ValueError(f"dataset {self.name!r} has no labels")
        return len(np.unique(self.labels))

    def subset(self, indices, name="") -> "Dataset":
        indices = np.asarray(indices)
        labels = self.labels[indices] if self.labels is not None else None
        return Dataset(self.points[indices], labels, name or self.name)


@dataclass
class MixtureSpec:
    """Gaussian mixture description for the synthetic generator.

    ``components`` is a sequence of (weight, mean, covariance); weights must
    be positive and sum to 1, covariances symmetric positive-definite.
    """

    components: list[tuple[float, np.ndarray, np.ndarray]]
    points_per_component: int
    rng_seed: int

    def __post_init__(self):
        if not self.components:
            raise ValueError("mixture needs at least one component")
        if self.points_per_component < 1:
            raise ValueError("points_per_component must be >= 1")
        comps = []
        dim = None
        for weight, mean, cov in self.components:
            weight = float(weight)
            mean = np.asarray(mean, dtype=np.float64).ravel()
            cov = np.asarray(cov, dtype=np.float64)
            if weight <= 0:
                raise ValueError("component weights must be positive")
            if dim is None:
                dim = mean.size
            if mean.size != dim or cov.shape != (dim, dim):
                raise ValueError("component mean/covariance shapes disagree")
            if not np.allclose(cov, cov.T):
                raise ValueError("covariance matrix is not symmetric")
            comps.append((weight, mean, cov))
        total = sum(w for w, _, _ in comps)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"component weights sum to {total}, expected 1")
        self.components = comps


def load_csv(path, label_column: int | None = None, name: str | None = None) -> Dataset:
    """Load a comma-delimited dataset.

    A header row is detected (and skipped) when any non-label field of the
    first row fails to parse as a number; ``label_column`` is a 0-based
    column index.
    """
    path = Path(path)
    rows = []
    with open(path, newline="") as fh:
        for lineno, fields in enumerate(csv.reader(fh), start=1):
            fields = [f.strip() for f in fields]
            if not fields or all(f == "" for f in fields):
                continue
            rows.append((lineno, fields))
    if not rows:
        raise ValueError(f"{path}: empty file")

    def coord_fields(fields):
        return [f for i, f in enumerate(fields) if i != label_column]

    def first_parse_failure(fields):
        for f in coord_fields(fields):
            try:
                float(f)
            except ValueError:
                return f
        return None

    bad = first_parse_failure(rows[0][1])
    if bad is not None:
        # non-numeric first row is a header, unless it is the only row
        rows = rows[1:]
        if not rows:
            raise ValueError(
                f"{path}: row 1: could not convert string to float: {bad!r}"
            )

    width = len(rows[0][1])
    if label_column is not None and not (0 <= label_column < width):
        raise ValueError(f"label column {label_column} out of range for {width} fields")

    points, labels = [], []
    for lineno, fields in rows:
        if len(fields) != width:
            raise ValueError(
                f"{path}: row {lineno} has {len(fields)} fields, expected {width}"
            )
        try:
            coords = [float(f) for f in coord_fields(fields)]
        except ValueError as exc:
            raise ValueError(f"{path}: row {lineno}: {exc}") from None
        points.append(coords)
        if label_column is not None:
            labels.append(fields[label_column])

    return Dataset(
        np.array(points, dtype=np.float64),
        np.array(labels) if label_column is not None else None,
        name if name is not None else path.stem,
    )


def save_csv(data: Dataset, path) -> None:
    """Write a dataset as CSV; labels, if any, become the last column.

    Coordinates are written with ``repr`` so a reload recovers them exactly.
    """
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for i in range(data.n):
            row = [repr(float(c)) for c in data.points[i]]
            if data.labels is not None:
                row.append(str(data.labels[i]))
            writer.writerow(row)


def load_libsvm(path, name: str | None = None) -> Dataset:
    """Load a sparse "label idx:val ..." file into a dense dataset.

    Feature indices are 1-based and must be strictly increasing within a
    line; the dimension is the maximum index seen anywhere in the file.
    """
    path = Path(path)
    parsed = []
    max_idx = 0
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            tokens = line.split()
            if not tokens:
                continue
            label = tokens[0]
            feats = []
            prev = 0
            for tok in tokens[1:]:
                idx_s, sep, val_s = tok.partition(":")
                if not sep:
                    raise ValueError(f"{path}: line {lineno}: bad token {tok!r}")
                try:
                    idx = int(idx_s)
                    val = float(val_s)
                except ValueError:
                    raise ValueError(
                        f"{path}: line {lineno}: bad token {tok!r}"
                    ) from None
                if idx <= prev:
                    raise ValueError(
                        f"{path}: line {lineno}: feature indices must be "
                        f"strictly increasing (saw {idx} after {prev})"
                    )
                prev = idx
                feats.append((idx, val))
            max_idx = max(max_idx, prev)
            parsed.append((label, feats))
    if not parsed:
        raise ValueError(f"{path}: empty file")
    if max_idx == 0:
        raise ValueError(f"{path}: no features in file")

    points = np.zeros((len(parsed), max_idx), dtype=np.float64)
    labels = []
    for i, (label, feats) in enumerate(parsed):
        labels.append(label)
        for idx, val in feats:
            points[i, idx - 1] = val
    return Dataset(points, np.array(labels), name if name is not None else path.stem)


def generate_mixture(spec: MixtureSpec) -> Dataset:
    """Draw ``points_per_component`` samples from each Gaussian component.

    Labels record the source component index. Sampling uses the Cholesky
    factor of each covariance, so a non-positive-definite matrix is
    rejected and fixed seeds reproduce bit-identical datasets.
    """
    rng = np.random.default_rng(spec.rng_seed)
    blocks, labels = [], []
    for comp_id, (_, mean, cov) in enumerate(spec.components):
        try:
            np.linalg.cholesky(cov)
        except np.linalg.LinAlgError:
            raise ValueError(
                f"component {comp_id}: covariance is not positive-definite"
            ) from None
        blocks.append(
            rng.multivariate_normal(
                mean, cov, size=spec.points_per_component, method="cholesky"
            )
        )
        labels.extend([comp_id] * spec.points_per_component)
    return Dataset(np.vstack(blocks), np.array(labels, dtype=np.int64), "mixture")


def random_sample(data: Dataset, size: int, rng_seed: int) -> np.ndarray:
    """Uniformly sample ``size`` distinct point indices, without replacement.

    Returns the indices sorted ascending; deterministic for a fixed seed.
    """
    if not 1 <= size <= data.n:
        raise ValueError(f"sample size {size} outside [1, {data.n}]")
    rng = np.random.default_rng(rng_seed)
    return np.sort(rng.choice(data.n, size=size, replace=False)).astype(np.int64)


def sqrt_sample_size(n: int) -> int:
    """Sample size used by the sampled seeding variant: floor(sqrt(n))."""
    return math.isqrt(n)

"""Configuration-driven benchmark harness.

A single YAML file declares datasets, seeding methods, K-means settings,
and the output format; ``run_benchmark`` executes every (dataset, method)
combination as seed -> Lloyd -> evaluate and assembles one report row per
combination. Stochastic methods are averaged over ``repeats`` runs with
per-repeat seeds ``rng_seed + repeat_index`` so each run is individually
reproducible.

Wall-clock time is recorded but can be excluded from serialized reports
(``include_timing=False`` / ``--no-timing``) to make re-runs of an
all-deterministic config byte-identical.
"""

from __future__ import annotations

import io
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import yaml

from aimk import counters
from aimk.data import Dataset, load_csv, load_libsvm
from aimk.lloyd import DEFAULT_MAX_ITER, DEFAULT_SHIFT_TOL, lloyd
from aimk.metrics import accuracy, evaluate
from aimk.mst import THRESHOLD_MODES
from aimk.seeding import (
    SEED_METHODS,
    aimk_rs_seeds,
    aimk_seeds,
    forgy_seeds,
    kmeanspp_seeds,
    maximin_seeds,
    prepare_pipeline,
    select_centers,
)

LAMBDA_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
INDEX_NAMES = ("acc", "ri", "f")

DEFAULT_REPEATS = {"aimk": 1, "aimk_rs": 10, "forgy": 10, "kmeanspp": 10, "maximin": 10}


class ConfigError(ValueError):
    """Invalid benchmark configuration."""


@dataclass
class DatasetSpec:
    name: str
    path: str
    format: str = "csv"
    label_column: int | None = None
    n_clusters: int | None = None


@dataclass
class MethodSpec:
    method: str
    lam: float | None = None
    thr_mode: str = "max"
    repeats: int | None = None
    rng_seed: int = 0

    def effective_repeats(self) -> int:
        return self.repeats if self.repeats is not None else DEFAULT_REPEATS[self.method]


@dataclass
class KmeansParams:
    max_iter: int = DEFAULT_MAX_ITER
    shift_tol: float = DEFAULT_SHIFT_TOL


@dataclass
class OutputSpec:
    format: str = "table"
    path: str | None = None


@dataclass
class BenchConfig:
    datasets: list[DatasetSpec]
    methods: list[MethodSpec]
    kmeans: KmeansParams = field(default_factory=KmeansParams)
    output: OutputSpec = field(default_factory=OutputSpec)

    def validate(self):
        if not self.datasets:
            raise ConfigError("no datasets configured")
        if not self.methods:
            raise ConfigError("no methods configured")
        for ds in self.datasets:
            if ds.format not in ("csv", "libsvm"):
                raise ConfigError(f"{ds.name}: unknown format {ds.format!r}")
        for m in self.methods:
            if m.method not in SEED_METHODS:
                raise ConfigError(
                    f"invalid method tag {m.method!r} (expected one of {SEED_METHODS})"
                )
            if m.method in ("aimk", "aimk_rs"):
                if m.lam is None or not 0.0 <= m.lam <= 1.0:
                    raise ConfigError(f"{m.method}: lambda must be set in [0, 1]")
                if m.thr_mode not in THRESHOLD_MODES:
                    raise ConfigError(f"{m.method}: bad thr_mode {m.thr_mode!r}")
            repeats = m.effective_repeats()
            if repeats < 1:
                raise ConfigError(f"{m.method}: repeats must be >= 1")
            if m.method == "aimk" and repeats != 1:
                raise ConfigError("aimk is deterministic; repeats must be 1")
        if self.output.format not in ("table", "csv", "json"):
            raise ConfigError(f"unknown output format {self.output.format!r}")

    @classmethod
    def from_file(cls, path) -> "BenchConfig":
        with open(path) as fh:
            raw = yaml.safe_load(fh)
        if not isinstance(raw, dict):
            raise ConfigError(f"{path}: top level must be a mapping")
        unknown = set(raw) - {"datasets", "methods", "kmeans", "output"}
        if unknown:
            raise ConfigError(f"{path}: unknown top-level keys {sorted(unknown)}")
        try:
            datasets = [DatasetSpec(**d) for d in raw.get("datasets", [])]
            methods = [
                MethodSpec(**{("lam" if k == "lambda" else k): v for k, v in m.items()})
                for m in raw.get("methods", [])
            ]
            kmeans = KmeansParams(**raw.get("kmeans", {}))
            output = OutputSpec(**raw.get("output", {}))
        except TypeError as exc:
            raise ConfigError(f"{path}: {exc}") from None
        config = cls(datasets, methods, kmeans, output)
        config.validate()
        return config


@dataclass
class BenchRow:
    dataset: str
    method: str
    lam: float | None
    thr_mode: str | None
    repeats: int
    acc: float | None
    ri: float | None
    f: float | None
    acc_std: float | None
    ri_std: float | None
    f_std: float | None
    sse: float
    dist_evals: float  # seeding-phase distance evaluations, mean over repeats
    wall_time_s: float

    _FIELDS = (
        "dataset", "method", "lam", "thr_mode", "repeats",
        "acc", "ri", "f", "acc_std", "ri_std", "f_std",
        "sse", "dist_evals", "wall_time_s",
    )

    def as_dict(self, include_timing=True) -> dict:
        d = {k: getattr(self, k) for k in self._FIELDS}
        if not include_timing:
            del d["wall_time_s"]
        return d


@dataclass
class BenchReport:
    rows: list[BenchRow]

    def to_json(self, include_timing=True) -> str:
        """One JSON object per line; floats survive a round-trip exactly."""
        return "\n".join(
            json.dumps(r.as_dict(include_timing)) for r in self.rows
        ) + "\n"

    def to_csv(self, include_timing=True) -> str:
        import csv as _csv

        buf = io.StringIO()
        fields = [f for f in BenchRow._FIELDS if include_timing or f != "wall_time_s"]
        writer = _csv.writer(buf)
        writer.writerow(fields)
        for r in self.rows:
            d = r.as_dict(include_timing)
            writer.writerow(
                ["" if d[f] is None else repr(d[f]) if isinstance(d[f], float) else d[f]
                 for f in fields]
            )
        return buf.getvalue()

    def to_table(self, include_timing=True) -> str:
        headers = ["dataset", "method", "lam", "thr", "rep",
                   "acc", "ri", "f", "sse", "dist_evals"]
        if include_timing:
            headers.append("time_s")
        table = [headers]
        for r in self.rows:
            def score(mean, std):
                if mean is None:
                    return "-"
                return f"{mean:.4f}" + (f"±{std:.4f}" if std is not None else "")

            row = [
                r.dataset,
                r.method,
                "-" if r.lam is None else f"{r.lam:g}",
                r.thr_mode or "-",
                str(r.repeats),
                score(r.acc, r.acc_std),
                score(r.ri, r.ri_std),
                score(r.f, r.f_std),
                f"{r.sse:.6g}",
                f"{r.dist_evals:.0f}",
            ]
            if include_timing:
                row.append(f"{r.wall_time_s:.3f}")
            table.append(row)
        widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                 for row in table]
        lines.insert(1, "-" * len(lines[0]))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str, include_timing=True) -> str:
        return {"table": self.to_table, "csv": self.to_csv, "json": self.to_json}[
            fmt
        ](include_timing)


def load_dataset(spec: DatasetSpec) -> Dataset:
    if spec.format == "csv":
        return load_csv(spec.path, label_column=spec.label_column, name=spec.name)
    return load_libsvm(spec.path, name=spec.name)


def _clusters_for(data: Dataset, spec: DatasetSpec) -> int:
    if spec.n_clusters is not None:
        return spec.n_clusters
    if data.labels is None:
        raise ConfigError(
            f"{spec.name}: n_clusters must be given for unlabeled datasets"
        )
    return data.n_classes()


def _seed_once(data: Dataset, nc: int, m: MethodSpec, seed: int):
    if m.method == "aimk":
        return aimk_seeds(data, nc, m.lam, m.thr_mode)
    if m.method == "aimk_rs":
        return aimk_rs_seeds(data, nc, m.lam, seed, m.thr_mode)
    fn = {"forgy": forgy_seeds, "kmeanspp": kmeanspp_seeds, "maximin": maximin_seeds}
    return fn[m.method](data, nc, seed)


def run_combination(data: Dataset, nc: int, m: MethodSpec, kmeans: KmeansParams) -> BenchRow:
    repeats = m.effective_repeats()
    scores = {k: [] for k in INDEX_NAMES}
    sses, evals = [], []
    t0 = time.perf_counter()
    for r in range(repeats):
        c0 = counters.value()
        seeds = _seed_once(data, nc, m, m.rng_seed + r)
        evals.append(counters.value() - c0)
        result = lloyd(data, seeds, kmeans.max_iter, kmeans.shift_tol)
        sses.append(result.sse)
        if data.labels is not None:
            report = evaluate(result.assignments, data.labels)
            scores["acc"].append(report.acc)
            scores["ri"].append(report.ri)
            scores["f"].append(report.f_measure)
    wall = time.perf_counter() - t0

    def mean_std(values):
        if not values:
            return None, None
        mean = float(np.mean(values))
        std = float(np.std(values)) if len(values) > 1 else None
        return mean, std

    acc, acc_std = mean_std(scores["acc"])
    ri, ri_std = mean_std(scores["ri"])
    f, f_std = mean_std(scores["f"])
    is_aimk = m.method in ("aimk", "aimk_rs")
    return BenchRow(
        dataset=data.name,
        method=m.method,
        lam=m.lam if is_aimk else None,
        thr_mode=m.thr_mode if is_aimk else None,
        repeats=repeats,
        acc=acc, ri=ri, f=f,
        acc_std=acc_std, ri_std=ri_std, f_std=f_std,
        sse=float(np.mean(sses)),
        dist_evals=float(np.mean(evals)),
        wall_time_s=wall,
    )


def run_benchmark(config: BenchConfig) -> BenchReport:
    """Execute every configured (dataset, method) combination.

    Unreadable datasets are skipped with a warning; if every dataset fails
    to load the whole run is an error.
    """
    config.validate()
    rows = []
    loaded_any = False
    for ds_spec in config.datasets:
        try:
            data = load_dataset(ds_spec)
            nc = _clusters_for(data, ds_spec)
        except ConfigError:
            raise
        except (OSError, ValueError) as exc:
            print(f"warning: skipping dataset {ds_spec.name}: {exc}", file=sys.stderr)
            continue
        loaded_any = True
        for m in config.methods:
            rows.append(run_combination(data, nc, m, config.kmeans))
    if not loaded_any:
        raise ConfigError("all configured datasets failed to load")
    return BenchReport(rows)


def write_report(report: BenchReport, output: OutputSpec, include_timing=True) -> str:
    text = report.render(output.format, include_timing)
    if output.path:
        Path(output.path).write_text(text)
    return text


@dataclass
class SweepResult:
    """Score grid from a parameter sweep plus per-index argmax markers."""

    axis_name: str
    axis_values: tuple
    scores: dict  # index name -> list of scores along the axis

    def best_values(self, index: str) -> list:
        row = self.scores[index]
        top = max(row)
        return [v for v, s in zip(self.axis_values, row) if s == top]

    def to_table(self) -> str:
        header = [self.axis_name] + [f"{v:g}" for v in self.axis_values]
        lines = ["\t".join(header)]
        for index in INDEX_NAMES:
            row = self.scores[index]
            top = max(row)
            cells = [f"{s:.4f}*" if s == top else f"{s:.4f}" for s in row]
            lines.append("\t".join([index] + cells))
        return "\n".join(lines) + "\n"


def sweep_lambda(
    data: Dataset,
    nc: int,
    thr_mode: str = "max",
    kmeans: KmeansParams | None = None,
) -> SweepResult:
    """Evaluate the deterministic seeder across the mixing-weight grid.

    The threshold pipeline is prepared once and shared by every run, so
    the sweep isolates the effect of the weight alone.
    """
    if data.labels is None:
        raise ValueError("lambda sweep needs ground-truth labels")
    kmeans = kmeans or KmeansParams()
    pipe = prepare_pipeline(data, thr_mode)
    scores = {k: [] for k in INDEX_NAMES}
    for lam in LAMBDA_GRID:
        seeds = select_centers(pipe, nc, lam)
        result = lloyd(data, seeds, kmeans.max_iter, kmeans.shift_tol)
        report = evaluate(result.assignments, data.labels)
        scores["acc"].append(report.acc)
        scores["ri"].append(report.ri)
        scores["f"].append(report.f_measure)
    return SweepResult("lambda", LAMBDA_GRID, scores)


def sweep_threshold(
    data: Dataset,
    nc: int,
    kmeans: KmeansParams | None = None,
) -> dict[tuple[str, float], float]:
    """ACC for every (threshold mode, lambda endpoint) combination."""
    if data.labels is None:
        raise ValueError("threshold sweep needs ground-truth labels")
    kmeans = kmeans or KmeansParams()
    grid = {}
    for mode in THRESHOLD_MODES:
        pipe = prepare_pipeline(data, mode)
        for lam in (0.0, 1.0):
            seeds = select_centers(pipe, nc, lam)
            result = lloyd(data, seeds, kmeans.max_iter, kmeans.shift_tol)
            acc, _ = accuracy(result.assignments, data.labels)
            grid[(mode, lam)] = acc
    return grid


def threshold_table(grid: dict[tuple[str, float], float]) -> str:
    lines = ["thr\tlambda=0\tlambda=1"]
    for mode in THRESHOLD_MODES:
        lines.append(
            f"{mode}\t{grid[(mode, 0.0)]:.4f}\t{grid[(mode, 1.0)]:.4f}"
        )
    return "\n".join(lines) + "\n"

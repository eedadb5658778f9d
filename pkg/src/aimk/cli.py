"""Command-line interface.

Verbs:
  bench        run a YAML benchmark config and print/write the report
  seeds        print the initial-center indices one seeder picks
  sweep-lambda score the deterministic seeder across the mixing-weight grid
  sweep-thr    score every (threshold mode, lambda endpoint) combination
  gen-mixture  sample a Gaussian mixture spec into a CSV file

Exit status is 0 on success and 1 on any validation or input error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np
import yaml

from aimk import __version__
from aimk.bench import (
    BenchConfig,
    run_benchmark,
    sweep_lambda,
    sweep_threshold,
    threshold_table,
    write_report,
)
from aimk.data import MixtureSpec, generate_mixture, load_csv, load_libsvm, save_csv
from aimk.mst import THRESHOLD_MODES, prim_mst, pairwise_distances, write_edge_list
from aimk.seeding import (
    SEED_METHODS,
    aimk_rs_seeds,
    aimk_seeds,
    forgy_seeds,
    kmeanspp_seeds,
    maximin_seeds,
)


def _add_dataset_args(sub):
    sub.add_argument("dataset", help="path to the dataset file")
    sub.add_argument("--format", choices=("csv", "libsvm"), default=None,
                     help="input format (default: libsvm for .libsvm/.svm, else csv)")
    sub.add_argument("--label-col", type=int, default=None,
                     help="0-based label column for CSV input")


def _load_dataset(args):
    fmt = args.format
    if fmt is None:
        fmt = "libsvm" if args.dataset.endswith((".libsvm", ".svm", ".t")) else "csv"
    if fmt == "libsvm":
        return load_libsvm(args.dataset)
    return load_csv(args.dataset, label_column=args.label_col)


def _cmd_bench(args):
    config = BenchConfig.from_file(args.config)
    report = run_benchmark(config)
    text = write_report(report, config.output, include_timing=not args.no_timing)
    if not config.output.path:
        sys.stdout.write(text)
    else:
        print(f"report written to {config.output.path}")


def _cmd_seeds(args):
    data = _load_dataset(args)
    if args.method in ("aimk", "aimk_rs") and args.lam is None:
        raise ValueError(f"{args.method} requires --lambda")
    if args.method == "aimk":
        seeds = aimk_seeds(data, args.k, args.lam, args.thr_mode)
    elif args.method == "aimk_rs":
        seeds = aimk_rs_seeds(data, args.k, args.lam, args.seed, args.thr_mode)
    else:
        fn = {"forgy": forgy_seeds, "kmeanspp": kmeanspp_seeds, "maximin": maximin_seeds}
        seeds = fn[args.method](data, args.k, args.seed)
    if args.dump_mst:
        write_edge_list(prim_mst(pairwise_distances(data)), args.dump_mst)
    print(" ".join(str(i) for i in seeds.center_indices))


def _cmd_sweep_lambda(args):
    data = _load_dataset(args)
    result = sweep_lambda(data, args.k, args.thr_mode)
    sys.stdout.write(result.to_table())
    for index in ("acc", "ri", "f"):
        best = result.best_values(index)
        if not (0.0 in best or 1.0 in best):
            print(f"note: {index} peaks at lambda={best} rather than an endpoint")


def _cmd_sweep_thr(args):
    data = _load_dataset(args)
    grid = sweep_threshold(data, args.k)
    sys.stdout.write(threshold_table(grid))


def _cmd_gen_mixture(args):
    with open(args.spec) as fh:
        raw = yaml.safe_load(fh)
    try:
        spec = MixtureSpec(
            components=[
                (c["weight"], np.asarray(c["mean"]), np.asarray(c["cov"]))
                for c in raw["components"]
            ],
            points_per_component=raw["points_per_component"],
            rng_seed=raw["rng_seed"],
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"{args.spec}: bad mixture spec ({exc})") from None
    data = generate_mixture(spec)
    save_csv(data, args.output)
    print(f"wrote {data.n} points ({data.p}-d, {len(spec.components)} components) "
          f"to {args.output}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aimk")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench", help="run a benchmark config")
    p.add_argument("config", help="YAML benchmark configuration")
    p.add_argument("--no-timing", action="store_true",
                   help="omit wall-clock column so reports are byte-reproducible")
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("seeds", help="print chosen initial-center indices")
    _add_dataset_args(p)
    p.add_argument("--method", choices=SEED_METHODS, required=True)
    p.add_argument("--k", type=int, required=True, help="number of centers")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="mixing weight in [0, 1]")
    p.add_argument("--thr-mode", choices=THRESHOLD_MODES, default="max")
    p.add_argument("--seed", type=int, default=0, help="rng seed for stochastic methods")
    p.add_argument("--dump-mst", metavar="PATH", default=None,
                   help="also write the MST edge list to PATH")
    p.set_defaults(fn=_cmd_seeds)

    p = sub.add_parser("sweep-lambda", help="score the lambda grid on one dataset")
    _add_dataset_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--thr-mode", choices=THRESHOLD_MODES, default="max")
    p.set_defaults(fn=_cmd_sweep_lambda)

    p = sub.add_parser("sweep-thr", help="score threshold modes at both lambda endpoints")
    _add_dataset_args(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_sweep_thr)

    p = sub.add_parser("gen-mixture", help="sample a Gaussian mixture spec to CSV")
    p.add_argument("spec", help="YAML mixture specification")
    p.add_argument("-o", "--output", required=True, help="output CSV path")
    p.set_defaults(fn=_cmd_gen_mixture)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

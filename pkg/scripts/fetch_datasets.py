#!/usr/bin/env python3
"""Fetch the benchmark datasets into data/.

The small UCI datasets are converted to the repo CSV convention
(coordinates first, class label last, no header). Wine needs no network:
it ships with scikit-learn. The large LIBSVM files (--large) are only
needed for the optional slow test suite and are kept in their native
sparse format.

Already-present files are skipped unless --force is given.
"""

import argparse
import bz2
import csv
import io
import sys
import urllib.request
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"
LIBSVM = "https://www.csie.ntu.edu.tw/~cjlin/libsvmtools/datasets"

# (output name, url, transform tag)
SMALL = [
    ("soybean-small.csv", f"{UCI}/soybean/soybean-small.data", "label_last"),
    ("zoo.csv", f"{UCI}/zoo/zoo.data", "drop_first_label_last"),
    ("haberman.csv", f"{UCI}/haberman/haberman.data", "label_last"),
]

LARGE = [
    ("ijcnn1.libsvm", f"{LIBSVM}/binary/ijcnn1.t.bz2"),
    ("phishing.libsvm", f"{LIBSVM}/binary/phishing"),
    ("mushrooms.libsvm", f"{LIBSVM}/binary/mushrooms"),
    ("protein.libsvm", f"{LIBSVM}/multiclass/protein.t.bz2"),
    ("sensit-seismic.libsvm", f"{LIBSVM}/multiclass/vehicle/seismic_scale.t.bz2"),
    ("sensit-combined.libsvm", f"{LIBSVM}/multiclass/vehicle/combined_scale.t.bz2"),
]


def download(url):
    print(f"  fetching {url}")
    with urllib.request.urlopen(url, timeout=60) as response:
        payload = response.read()
    if url.endswith(".bz2"):
        payload = bz2.decompress(payload)
    return payload


def write_wine(path):
    from sklearn.datasets import load_wine  # ships the UCI Wine data

    wine = load_wine()
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row, label in zip(wine.data, wine.target):
            writer.writerow([repr(float(v)) for v in row] + [str(int(label) + 1)])


def write_small(path, payload, transform):
    text = payload.decode()
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for line in text.splitlines():
            fields = [f.strip() for f in line.split(",") if f.strip() != ""]
            if not fields:
                continue
            if transform == "drop_first_label_last":
                fields = fields[1:]  # zoo rows start with the animal name
            writer.writerow(fields)


def fetch(name, builder, force):
    path = DATA_DIR / name
    if path.exists() and not force:
        print(f"  {name}: already present, skipping")
        return True
    try:
        builder(path)
    except Exception as exc:  # best-effort tool: report and carry on
        print(f"  {name}: FAILED ({exc})", file=sys.stderr)
        return False
    print(f"  {name}: ok")
    return True


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--large", action="store_true",
                        help="also fetch the large LIBSVM files for the slow suite")
    parser.add_argument("--force", action="store_true",
                        help="re-download files that already exist")
    args = parser.parse_args()
    DATA_DIR.mkdir(exist_ok=True)

    print("small datasets:")
    ok = fetch("wine.csv", write_wine, args.force)
    for name, url, transform in SMALL:
        ok &= fetch(
            name,
            lambda p, url=url, t=transform: write_small(p, download(url), t),
            args.force,
        )
    if args.large:
        print("large LIBSVM datasets (this downloads hundreds of MB):")
        for name, url in LARGE:
            ok &= fetch(
                name, lambda p, url=url: p.write_bytes(download(url)), args.force
            )
    if not ok:
        print("\nsome downloads failed; the affected tests will skip", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

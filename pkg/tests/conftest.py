from pathlib import Path

import numpy as np
import pytest

from aimk.data import Dataset

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"


@pytest.fixture
def line4():
    """The 1-d desk example: points 0, 1, 2, 10 with a 3+1 label split."""
    return Dataset(
        np.array([[0.0], [1.0], [2.0], [10.0]]),
        labels=np.array(["a", "a", "a", "b"]),
        name="line4",
    )


def dataset_path(filename):
    return DATA_DIR / filename


def require_dataset(filename):
    path = dataset_path(filename)
    if not path.exists():
        pytest.skip(
            f"{filename} is not vendored in data/; run scripts/fetch_datasets.py "
            "in an environment with network access"
        )
    return path

"""Fixtures only; importable helpers live in synthdata.py."""

from pathlib import Path

import numpy as np
import pytest

from synthdata import class_pattern_dataset, write_dataset


@pytest.fixture(scope="session")
def synth_data_dir(tmp_path_factory) -> Path:
    rs = np.random.RandomState(5)
    root = tmp_path_factory.mktemp("synth-data")
    return write_dataset(
        root, "mnist",
        train=class_pattern_dataset(rs, 400),
        test=class_pattern_dataset(rs, 200),
    )

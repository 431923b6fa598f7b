"""IDX dataset files: location conventions and minimal binary I/O.

The harness talks to the augmentation toolkit only through files and its
CLI, so it carries its own small IDX reader/writer instead of importing
the toolkit's.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

IMAGE_MAGIC = 0x00000803
LABEL_MAGIC = 0x00000801

SPLIT_FILES = {
    "train": ("train-images-idx3-ubyte", "train-labels-idx1-ubyte"),
    "test": ("t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte"),
}


class MissingDataError(FileNotFoundError):
    """A dataset file is absent; the message lists every expected path."""


def dataset_dir(data_dir: str | Path, dataset: str) -> Path:
    return Path(data_dir) / dataset


def expected_files(data_dir: str | Path, dataset: str) -> list[Path]:
    base = dataset_dir(data_dir, dataset)
    return [base / name for names in SPLIT_FILES.values() for name in names]


def require_files(data_dir: str | Path, dataset: str) -> None:
    missing = [p for p in expected_files(data_dir, dataset) if not p.exists()]
    if missing:
        listing = "\n  ".join(str(p) for p in expected_files(data_dir, dataset))
        raise MissingDataError(
            f"dataset '{dataset}' not found under {dataset_dir(data_dir, dataset)}; "
            f"place the uncompressed IDX files at:\n  {listing}"
        )


def read_idx_images(path: str | Path) -> np.ndarray:
    data = Path(path).read_bytes()
    magic, count, height, width = struct.unpack_from(">IIII", data, 0)
    if magic != IMAGE_MAGIC:
        raise ValueError(f"{path}: not an IDX image file (magic 0x{magic:08x})")
    expected = 16 + count * height * width
    if len(data) != expected:
        raise ValueError(f"{path}: expected {expected} bytes, found {len(data)}")
    return np.frombuffer(data, dtype=np.uint8, offset=16).reshape(count, height, width)


def read_idx_labels(path: str | Path) -> np.ndarray:
    data = Path(path).read_bytes()
    magic, count = struct.unpack_from(">II", data, 0)
    if magic != LABEL_MAGIC:
        raise ValueError(f"{path}: not an IDX label file (magic 0x{magic:08x})")
    if len(data) != 8 + count:
        raise ValueError(f"{path}: expected {8 + count} bytes, found {len(data)}")
    return np.frombuffer(data, dtype=np.uint8, offset=8)


def write_idx_images(path: str | Path, images: np.ndarray) -> None:
    count, height, width = images.shape
    header = struct.pack(">IIII", IMAGE_MAGIC, count, height, width)
    Path(path).write_bytes(header + images.astype(np.uint8).tobytes())


def write_idx_labels(path: str | Path, labels: np.ndarray) -> None:
    header = struct.pack(">II", LABEL_MAGIC, len(labels))
    Path(path).write_bytes(header + labels.astype(np.uint8).tobytes())


def load_split(data_dir: str | Path, dataset: str, split: str) -> tuple[np.ndarray, np.ndarray]:
    base = dataset_dir(data_dir, dataset)
    image_name, label_name = SPLIT_FILES[split]
    images = read_idx_images(base / image_name)
    labels = read_idx_labels(base / label_name)
    if len(images) != len(labels):
        raise ValueError(
            f"{dataset}/{split}: {len(images)} images but {len(labels)} labels"
        )
    return images, labels

"""Shared generators for the test suite.

Random images come in three flavors so that transition logic is well
exercised: sparse (mostly background), near-threshold values, and fully
random bytes.  Everything is seeded; nothing here touches the package's
own RNG.
"""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np

DATA_DIR = Path(os.environ.get("STROKEAUG_DATA_DIR", Path(__file__).resolve().parent.parent / "data"))
# accept the file at the data root or in a mnist/ subdirectory
_CANDIDATES = [DATA_DIR / "train-images-idx3-ubyte", DATA_DIR / "mnist" / "train-images-idx3-ubyte"]
MNIST_IMAGES = next((p for p in _CANDIDATES if p.exists()), _CANDIDATES[0])


def random_image(rs: np.random.RandomState, max_h: int = 8, max_w: int = 8) -> np.ndarray:
    h = rs.randint(1, max_h + 1)
    w = rs.randint(1, max_w + 1)
    flavor = rs.randint(3)
    if flavor == 0:
        img = rs.randint(0, 256, size=(h, w))
        img[rs.rand(h, w) < 0.5] = 0
    elif flavor == 1:
        img = rs.randint(0, 22, size=(h, w))  # straddles the default threshold
    else:
        img = rs.randint(0, 256, size=(h, w))
    return img.astype(np.uint8)


def random_image_batch(seed: int, count: int, max_h: int = 8, max_w: int = 8) -> list[np.ndarray]:
    rs = np.random.RandomState(seed)
    return [random_image(rs, max_h, max_w) for _ in range(count)]


def random_image_stack(seed: int, count: int, h: int, w: int) -> np.ndarray:
    """Fixed-size (count, h, w) uint8 stack mixing sparse and dense images."""
    rs = np.random.RandomState(seed)
    stack = rs.randint(0, 256, size=(count, h, w)).astype(np.uint8)
    stack[rs.rand(count, h, w) < 0.4] = 0
    return stack


def synthetic_glyphs(count: int, seed: int = 7, size: int = 28) -> np.ndarray:
    """Handwriting-like 28x28 strokes: a few bright random polylines each.

    Stand-in for digit scans when no real dataset file is on disk.
    """
    rs = np.random.RandomState(seed)
    out = np.zeros((count, size, size), dtype=np.uint8)
    for img in out:
        points = rs.randint(4, size - 4, size=(rs.randint(3, 6), 2))
        for (r0, c0), (r1, c1) in zip(points[:-1], points[1:]):
            steps = max(abs(int(r1) - int(r0)), abs(int(c1) - int(c0)), 1)
            for t in range(steps + 1):
                r = int(round(r0 + (r1 - r0) * t / steps))
                c = int(round(c0 + (c1 - c0) * t / steps))
                img[r, c] = rs.randint(180, 256)
                if r + 1 < size:
                    img[r + 1, c] = max(img[r + 1, c], rs.randint(120, 200))
    return out

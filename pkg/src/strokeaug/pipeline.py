"""Dataset-level augmentation over deterministic per-image substreams.

Each image index gets its own SplitMix64 stream derived from the base
seed, so results are independent of iteration order and worker count.
The first draw of every substream is the apply/skip Bernoulli; it is
consumed even when the image passes through untouched, keeping streams
aligned across implementations.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .augment import AugmentConfig, augment_array
from .pixelgrid import LabeledDataset, rng_new, substream_seeds


@dataclass(frozen=True)
class PipelineConfig:
    augment: AugmentConfig
    apply_prob: float = 0.5
    base_seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.apply_prob <= 1.0:
            raise ValueError(f"apply_prob must be in [0, 1], got {self.apply_prob}")
        if not 0 <= self.base_seed < 2**64:
            raise ValueError(f"base_seed must be an unsigned 64-bit value, got {self.base_seed}")


class InkRecord(NamedTuple):
    nonzero: int
    ink_sum: int


def augmented_mask(count: int, cfg: PipelineConfig) -> np.ndarray:
    """Boolean mask of which image indices receive augmentation.

    Mirrors the apply/skip draw :func:`augment_dataset` makes for each
    image, without running any kernel.
    """
    seeds = substream_seeds(cfg.base_seed, count)
    return np.array(
        [rng_new(seed).bernoulli(cfg.apply_prob) for seed in seeds], dtype=bool
    )


def _augment_one(images: np.ndarray, out: np.ndarray, i: int, seed: int, cfg: PipelineConfig) -> bool:
    rng = rng_new(seed)
    if rng.bernoulli(cfg.apply_prob):
        out[i] = augment_array(images[i], cfg.augment, rng)
        return True
    out[i] = images[i]
    return False


def augment_dataset(
    ds: LabeledDataset, cfg: PipelineConfig, workers: int | None = None
) -> LabeledDataset:
    """Augment each image with probability ``apply_prob``; labels, order,
    and dimensions are preserved.

    ``workers`` only parallelizes the work; any worker count produces
    byte-identical output.
    """
    out = np.empty_like(ds.images)
    seeds = substream_seeds(cfg.base_seed, len(ds))
    indices = range(len(ds))
    if workers is not None and workers > 1 and len(ds):
        with ThreadPoolExecutor(max_workers=workers) as pool:
            # list() drains the iterator so worker exceptions propagate.
            list(pool.map(lambda i: _augment_one(ds.images, out, i, seeds[i], cfg), indices))
    else:
        for i in indices:
            _augment_one(ds.images, out, i, seeds[i], cfg)
    return LabeledDataset(out, ds.labels, ds.num_classes)


def ink_stats(ds: LabeledDataset) -> list[InkRecord]:
    """Per-image (nonzero pixel count, total intensity), in dataset order."""
    if not len(ds):
        return []
    flat = ds.images.reshape(len(ds), -1)
    nonzero = np.count_nonzero(flat, axis=1)
    sums = flat.sum(axis=1, dtype=np.int64)
    return [InkRecord(int(n), int(s)) for n, s in zip(nonzero, sums)]

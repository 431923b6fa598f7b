"""Core pixel-grid types and the deterministic random-number contract.

Every random decision in this package flows through :class:`RngStream`
(SplitMix64), so that a given seed reproduces byte-identical results on
any platform and under any processing order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF

_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB
_TWO64 = 1 << 64


def _as_readonly(arr: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(arr, dtype=np.uint8)
    if out is arr or out.base is arr:
        out = out.copy()
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class GrayImage:
    """Fixed-size 8-bit grayscale grid: 0 is background, 255 brightest ink.

    ``pixels`` is a read-only ``(height, width)`` uint8 array in C (row-major)
    order; pixel (row r, column c) is ``pixels[r, c]``.
    """

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise ValueError(f"image must be 2-D, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image dimensions must be positive, got {arr.shape}")
        if arr.dtype != np.uint8:
            if not np.issubdtype(arr.dtype, np.integer):
                raise ValueError(f"pixel values must be integers, got dtype {arr.dtype}")
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("pixel values must be in [0, 255]")
        object.__setattr__(self, "pixels", _as_readonly(arr))

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @classmethod
    def from_flat(cls, width: int, height: int, values) -> GrayImage:
        """Build from a row-major flat sequence of length width*height."""
        flat = np.asarray(values)
        if flat.size != width * height:
            raise ValueError(
                f"expected {width * height} pixels for {width}x{height}, got {flat.size}"
            )
        return cls(flat.reshape(height, width))

    def flat(self) -> np.ndarray:
        """Row-major flat view of the pixels."""
        return self.pixels.reshape(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    def __hash__(self):
        return hash((self.pixels.shape, self.pixels.tobytes()))


@dataclass(frozen=True)
class LabeledDataset:
    """Ordered image stack plus class labels.

    ``images`` is ``(count, height, width)`` uint8, ``labels`` is ``(count,)``
    with every label below ``num_classes``. Both arrays are read-only.
    """

    images: np.ndarray
    labels: np.ndarray
    num_classes: int

    def __post_init__(self):
        imgs = np.asarray(self.images)
        labs = np.asarray(self.labels)
        if imgs.ndim != 3:
            raise ValueError(f"images must be (count, height, width), got shape {imgs.shape}")
        if len(imgs) and (imgs.shape[1] < 1 or imgs.shape[2] < 1):
            raise ValueError(f"image dimensions must be positive, got {imgs.shape[1:]}")
        if imgs.dtype != np.uint8:
            if not np.issubdtype(imgs.dtype, np.integer):
                raise ValueError(f"pixel values must be integers, got dtype {imgs.dtype}")
            if imgs.size and (imgs.min() < 0 or imgs.max() > 255):
                raise ValueError("pixel values must be in [0, 255]")
        if labs.ndim != 1 or len(labs) != len(imgs):
            raise ValueError(f"need one label per image, got {len(imgs)} images, {labs.shape} labels")
        if not np.issubdtype(labs.dtype, np.integer):
            raise ValueError(f"labels must be integers, got dtype {labs.dtype}")
        if self.num_classes < 1:
            raise ValueError("num_classes must be positive")
        if len(labs):
            if labs.min() < 0 or labs.max() >= self.num_classes:
                raise ValueError(f"labels must lie in [0, {self.num_classes})")
        object.__setattr__(self, "images", _as_readonly(imgs))
        labs = np.ascontiguousarray(labs, dtype=np.int64).copy()
        labs.flags.writeable = False
        object.__setattr__(self, "labels", labs)

    def __len__(self) -> int:
        return len(self.images)

    @property
    def height(self) -> int:
        return self.images.shape[1]

    @property
    def width(self) -> int:
        return self.images.shape[2]

    def image(self, i: int) -> GrayImage:
        return GrayImage(self.images[i])


@dataclass
class RngStream:
    """SplitMix64 stream: 64-bit state, fixed draw-count primitives.

    The integer and Bernoulli draws each consume exactly one ``next_u64``
    call, so draw sequences can be replayed and audited across
    implementations.  Single-owner mutable state; parallel work derives
    per-item streams via :func:`derive_substream` instead of sharing one.
    """

    state: int = field(default=0)

    def __post_init__(self):
        self.state &= MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX_2) & MASK64
        return z ^ (z >> 31)

    def uniform_below(self, n: int) -> int:
        """Uniform integer in [0, n) via the multiply-high mapping (one draw)."""
        if not 1 <= n <= (1 << 32):
            raise ValueError(f"n must be in [1, 2^32], got {n}")
        return (self.next_u64() * n) >> 64

    def bernoulli(self, p: float) -> bool:
        """True with probability p (one draw): u < floor(p * 2^64)."""
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p must be in [0, 1], got {p}")
        # p * 2^64 is exact for any float p (power-of-two scaling).
        return self.next_u64() < int(p * _TWO64)


def rng_new(seed: int) -> RngStream:
    """Fresh SplitMix64 stream from a 64-bit seed."""
    return RngStream(seed & MASK64)


def derive_substream(base_seed: int, index: int) -> RngStream:
    """Independent stream for item ``index``: seeded with the (index+1)-th
    output of a master stream seeded with ``base_seed``.

    Depends only on (base_seed, index), never on processing order.
    """
    if index < 0:
        raise ValueError(f"index must be non-negative, got {index}")
    master = rng_new(base_seed)
    for _ in range(index):
        master.next_u64()
    return rng_new(master.next_u64())


def substream_seeds(base_seed: int, count: int) -> list[int]:
    """Sub-seeds for items 0..count-1 in one master pass.

    ``rng_new(substream_seeds(s, n)[i])`` behaves identically to
    ``derive_substream(s, i)``.
    """
    master = rng_new(base_seed)
    return [master.next_u64() for _ in range(count)]

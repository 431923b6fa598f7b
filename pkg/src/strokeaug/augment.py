"""Stroke-level augmentation kernels for handwritten-character images.

Four kernels, each a pure function of (image, config, rng stream):

* :func:`thicken` bolds strokes by filling the background pixel at every
  background-to-ink transition of a row scan, in both directions.
* :func:`thin` slims strokes by zeroing the first ink pixel of every run,
  from the left and then from the right.
* :func:`elongate` duplicates one random row (or column) in place,
  dropping the last so dimensions never change.
* :func:`line_erase` zeroes one random row (or column).

A pixel counts as ink when its value exceeds ``threshold``; everything at
or below it is background.  Draw order is part of the contract: rows top
to bottom, left-pass fills left to right, right-pass fills right to left,
one Bernoulli per row in random mode (consumed even for skipped rows).
Within a pass, transitions are detected against the row as it stood when
the pass began; the right pass starts from the left pass's output.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .pixelgrid import GrayImage, RngStream


class Method(str, enum.Enum):
    THICK = "thick"
    THIN = "thin"
    ELONGATE = "elongate"
    LINE_ERASE = "lineerase"


class Mode(str, enum.Enum):
    COMPLETE = "complete"
    RANDOM = "random"
    X_AXIS = "x"
    Y_AXIS = "y"


_ROW_MODES = (Mode.COMPLETE, Mode.RANDOM)
_AXIS_MODES = (Mode.X_AXIS, Mode.Y_AXIS)


@dataclass(frozen=True)
class AugmentConfig:
    """Parameters shared by the four kernels.

    ``threshold`` separates ink from background noise, ``k`` bounds the
    random dimming of filled pixels (draws lie in [0, k-1]), ``row_prob``
    is the per-row selection probability in random mode.
    """

    method: Method
    mode: Mode
    threshold: int = 10
    k: int = 10
    row_prob: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "mode", Mode(self.mode))
        if not 0 <= self.threshold <= 255:
            raise ValueError(f"threshold must be in [0, 255], got {self.threshold}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if not 0.0 <= self.row_prob <= 1.0:
            raise ValueError(f"row_prob must be in [0, 1], got {self.row_prob}")
        axis_method = self.method in (Method.ELONGATE, Method.LINE_ERASE)
        if axis_method and self.mode not in _AXIS_MODES:
            raise ValueError(f"{self.method.value} needs mode x or y, got {self.mode.value}")
        if not axis_method and self.mode not in _ROW_MODES:
            raise ValueError(
                f"{self.method.value} needs mode complete or random, got {self.mode.value}"
            )


def _select_row(cfg: AugmentConfig, rng: RngStream) -> bool:
    if cfg.mode is Mode.RANDOM:
        return rng.bernoulli(cfg.row_prob)
    return True


def _thicken_row(row: np.ndarray, threshold: int, k: int, rng: RngStream) -> None:
    # Left pass: fill background pixel c at each (bg, ink) pair, left to right.
    # Site detection and the values read never overlap the cells written, so
    # the live row equals the pass-start snapshot for both.
    cols = np.nonzero((row[:-1] <= threshold) & (row[1:] > threshold))[0]
    for c in cols:
        d = rng.uniform_below(k)
        row[c] = max(int(row[c + 1]) - d, 0)
    # Right pass on the mutated row: fill background pixel c at each
    # (ink, bg) pair, right to left.
    cols = np.nonzero((row[1:] <= threshold) & (row[:-1] > threshold))[0] + 1
    for c in cols[::-1]:
        d = rng.uniform_below(k)
        row[c] = max(int(row[c - 1]) - d, 0)


def _thicken_array(img: np.ndarray, cfg: AugmentConfig, rng: RngStream) -> np.ndarray:
    out = img.copy()
    for r in range(out.shape[0]):
        if _select_row(cfg, rng):
            _thicken_row(out[r], cfg.threshold, cfg.k, rng)
    return out


def _thin_rows(rows: np.ndarray, threshold: int) -> None:
    # Both passes work on run boundaries of a snapshot; beyond-edge pixels
    # count as background, so a run touching the border still loses its
    # outermost pixel.
    ink = rows > threshold
    first = ink.copy()
    first[:, 1:] &= ~ink[:, :-1]
    rows[first] = 0
    ink = rows > threshold
    last = ink.copy()
    last[:, :-1] &= ~ink[:, 1:]
    rows[last] = 0


def _thin_array(img: np.ndarray, cfg: AugmentConfig, rng: RngStream) -> np.ndarray:
    out = img.copy()
    if cfg.mode is Mode.RANDOM:
        selected = np.array([rng.bernoulli(cfg.row_prob) for _ in range(out.shape[0])])
        if selected.any():
            sub = out[selected]
            _thin_rows(sub, cfg.threshold)
            out[selected] = sub
    else:
        _thin_rows(out, cfg.threshold)
    return out


def _elongate_array(img: np.ndarray, cfg: AugmentConfig, rng: RngStream) -> np.ndarray:
    if cfg.mode is Mode.X_AXIS:
        r = rng.uniform_below(img.shape[0])
        # Insert the duplicate right after its source, then trim the last
        # row so the image keeps its size.
        return np.concatenate([img[: r + 1], img[r : r + 1], img[r + 1 :]])[: img.shape[0]]
    c = rng.uniform_below(img.shape[1])
    out = np.concatenate([img[:, : c + 1], img[:, c : c + 1], img[:, c + 1 :]], axis=1)
    return np.ascontiguousarray(out[:, : img.shape[1]])


def _line_erase_array(img: np.ndarray, cfg: AugmentConfig, rng: RngStream) -> np.ndarray:
    out = img.copy()
    if cfg.mode is Mode.X_AXIS:
        out[rng.uniform_below(img.shape[0]), :] = 0
    else:
        out[:, rng.uniform_below(img.shape[1])] = 0
    return out


_KERNELS = {
    Method.THICK: _thicken_array,
    Method.THIN: _thin_array,
    Method.ELONGATE: _elongate_array,
    Method.LINE_ERASE: _line_erase_array,
}


def augment_array(img: np.ndarray, cfg: AugmentConfig, rng: RngStream) -> np.ndarray:
    """Apply the configured kernel to a (height, width) uint8 array."""
    return _KERNELS[cfg.method](img, cfg, rng)


def _run(img: GrayImage, cfg: AugmentConfig, rng: RngStream, method: Method) -> GrayImage:
    if cfg.method is not method:
        raise ValueError(f"config is for {cfg.method.value}, not {method.value}")
    return GrayImage(_KERNELS[method](img.pixels, cfg, rng))


def thicken(img: GrayImage, cfg: AugmentConfig, rng: RngStream) -> GrayImage:
    """Bold the strokes; only background pixels are ever written."""
    return _run(img, cfg, rng, Method.THICK)


def thin(img: GrayImage, cfg: AugmentConfig, rng: RngStream) -> GrayImage:
    """Slim the strokes; pixels are only ever zeroed, never raised."""
    return _run(img, cfg, rng, Method.THIN)


def elongate(img: GrayImage, cfg: AugmentConfig, rng: RngStream) -> GrayImage:
    """Duplicate one random row (x mode) or column (y mode) in place."""
    return _run(img, cfg, rng, Method.ELONGATE)


def line_erase(img: GrayImage, cfg: AugmentConfig, rng: RngStream) -> GrayImage:
    """Zero one random row (x mode) or column (y mode)."""
    return _run(img, cfg, rng, Method.LINE_ERASE)


def apply_augmentation(img: GrayImage, cfg: AugmentConfig, rng: RngStream) -> GrayImage:
    """Apply whichever kernel ``cfg.method`` names."""
    return GrayImage(augment_array(img.pixels, cfg, rng))

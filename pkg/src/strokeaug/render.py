"""Sample-sheet montages: numbered cells of images on a bordered grid.

The raster stays text-free; cell numbering lives in the JSON-ready
manifest instead, mapping each 1-based cell (row-major) to its source
image index and an optional caller-supplied tag.  Scaling is nearest
neighbor only, so augmentation effects stay pixel-exact under a loupe.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from PIL import Image

from .errors import GridOverflowError, HeterogeneousDimsError
from .pixelgrid import GrayImage

BORDER_INTENSITY = 128

# Cell size when rendering an empty grid, where no image fixes it.
DEFAULT_CELL = (28, 28)


@dataclass(frozen=True)
class GridSpec:
    rows: int
    cols: int
    cell_border: int = 1
    scale: int = 4

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"grid must have positive rows and cols, got {self.rows}x{self.cols}")
        if self.cell_border < 0:
            raise ValueError(f"cell_border must be non-negative, got {self.cell_border}")
        if self.scale < 1:
            raise ValueError(f"scale must be at least 1, got {self.scale}")


def _canvas_size(spec: GridSpec, height: int, width: int) -> tuple[int, int]:
    b = spec.cell_border
    return (
        spec.rows * (height * spec.scale + b) + b,
        spec.cols * (width * spec.scale + b) + b,
    )


def render_grid(
    images: Sequence[GrayImage],
    spec: GridSpec,
    tags: str | Sequence[str | None] | None = None,
    source_indices: Sequence[int] | None = None,
    cell_size: tuple[int, int] | None = None,
) -> tuple[bytes, list[dict]]:
    """Render images row-major into a grid; return (PNG bytes, manifest).

    Borders draw at intensity 128 around occupied cells; unoccupied cells
    stay black.  ``cell_size`` (height, width) only matters when
    ``images`` is empty and the canvas size cannot be derived.
    """
    images = list(images)
    if len(images) > spec.rows * spec.cols:
        raise GridOverflowError(
            f"{len(images)} images do not fit a {spec.rows}x{spec.cols} grid"
        )
    if images:
        h, w = images[0].height, images[0].width
        for i, img in enumerate(images):
            if (img.height, img.width) != (h, w):
                raise HeterogeneousDimsError(
                    f"image 0 is {w}x{h} but image {i} is {img.width}x{img.height}"
                )
    else:
        h, w = cell_size if cell_size is not None else DEFAULT_CELL

    if isinstance(tags, str):
        tags = [tags] * len(images)
    if tags is not None and len(tags) != len(images):
        raise ValueError(f"need one tag per image: {len(images)} images, {len(tags)} tags")
    if source_indices is None:
        source_indices = range(len(images))
    elif len(source_indices) != len(images):
        raise ValueError(
            f"need one source index per image: {len(images)} images, {len(source_indices)} indices"
        )

    b, s = spec.cell_border, spec.scale
    canvas = np.zeros(_canvas_size(spec, h, w), dtype=np.uint8)
    manifest = []
    for i, img in enumerate(images):
        r, c = divmod(i, spec.cols)
        y = b + r * (h * s + b)
        x = b + c * (w * s + b)
        canvas[y - b : y + h * s + b, x - b : x + w * s + b] = BORDER_INTENSITY
        canvas[y : y + h * s, x : x + w * s] = np.repeat(np.repeat(img.pixels, s, 0), s, 1)
        manifest.append(
            {
                "cell": i + 1,
                "source_index": int(source_indices[i]),
                "tag": None if tags is None else tags[i],
            }
        )

    buf = io.BytesIO()
    Image.fromarray(canvas, mode="L").save(buf, format="PNG")
    return buf.getvalue(), manifest


def extract_cell(png: bytes, spec: GridSpec, cell: int) -> np.ndarray:
    """Recover a cell's unscaled pixels from a rendered PNG (1-based cell).

    Inverse of the placement in :func:`render_grid`; cell dimensions are
    inferred from the canvas size.
    """
    canvas = np.asarray(Image.open(io.BytesIO(png)).convert("L"))
    b, s = spec.cell_border, spec.scale
    hs = (canvas.shape[0] - b) // spec.rows - b
    ws = (canvas.shape[1] - b) // spec.cols - b
    if hs % s or ws % s:
        raise ValueError("canvas size inconsistent with the given grid spec")
    r, c = divmod(cell - 1, spec.cols)
    y = b + r * (hs + b)
    x = b + c * (ws + b)
    return canvas[y : y + hs : s, x : x + ws : s].copy()

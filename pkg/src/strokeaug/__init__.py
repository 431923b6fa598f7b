"""Deterministic stroke-level augmentations for handwritten-character datasets."""

from .augment import (
    AugmentConfig,
    Method,
    Mode,
    apply_augmentation,
    elongate,
    line_erase,
    thicken,
    thin,
)
from .errors import (
    BadMagicError,
    CountOverflowError,
    EmptyInputError,
    GridOverflowError,
    HeterogeneousDimsError,
    IdxFormatError,
    LabelOverflowError,
    StrokeAugError,
    TrailingBytesError,
    TruncatedDataError,
)
from .idxio import (
    read_header,
    read_images,
    read_images_array,
    read_labels,
    write_images,
    write_images_array,
    write_labels,
)
from .pipeline import InkRecord, PipelineConfig, augment_dataset, augmented_mask, ink_stats
from .pixelgrid import (
    GrayImage,
    LabeledDataset,
    RngStream,
    derive_substream,
    rng_new,
    substream_seeds,
)
from .render import GridSpec, extract_cell, render_grid

__version__ = "0.1.0"

__all__ = [
    "AugmentConfig",
    "BadMagicError",
    "CountOverflowError",
    "EmptyInputError",
    "GrayImage",
    "GridOverflowError",
    "GridSpec",
    "HeterogeneousDimsError",
    "IdxFormatError",
    "InkRecord",
    "LabeledDataset",
    "LabelOverflowError",
    "Method",
    "Mode",
    "PipelineConfig",
    "RngStream",
    "StrokeAugError",
    "TrailingBytesError",
    "TruncatedDataError",
    "apply_augmentation",
    "augment_dataset",
    "augmented_mask",
    "derive_substream",
    "elongate",
    "extract_cell",
    "ink_stats",
    "line_erase",
    "read_header",
    "read_images",
    "read_images_array",
    "read_labels",
    "render_grid",
    "rng_new",
    "substream_seeds",
    "thicken",
    "thin",
    "write_images",
    "write_images_array",
    "write_labels",
]

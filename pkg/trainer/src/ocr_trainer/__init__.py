"""Training harness scoring stroke-level augmentations on character datasets."""

from .augment_cli import AugmentCliError, augment_file
from .config import AugmentSpec, TrainConfig
from .datafiles import MissingDataError, load_split, read_idx_images, read_idx_labels
from .model import OcrNet
from .results import results_csv, results_markdown
from .training import TrainResult, evaluate, train

__version__ = "0.1.0"

__all__ = [
    "AugmentCliError",
    "AugmentSpec",
    "MissingDataError",
    "OcrNet",
    "TrainConfig",
    "TrainResult",
    "augment_file",
    "evaluate",
    "load_split",
    "read_idx_images",
    "read_idx_labels",
    "results_csv",
    "results_markdown",
    "train",
]

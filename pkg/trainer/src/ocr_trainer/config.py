"""Run configuration for the training harness."""

from __future__ import annotations

from dataclasses import dataclass

DATASETS = ("mnist", "kmnist", "emnist")
METHODS = ("thick", "thin", "elongate", "lineerase")
MODES = ("complete", "random", "x", "y")


@dataclass(frozen=True)
class AugmentSpec:
    """Settings forwarded verbatim to the augmentation CLI."""

    method: str
    mode: str
    row_prob: float = 0.5
    apply_prob: float = 0.5

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        for name in ("row_prob", "apply_prob"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")

    @property
    def label(self) -> str:
        if self.mode == "random":
            return f"{self.method}({self.mode}, row_prob={self.row_prob})"
        return f"{self.method}({self.mode})"


@dataclass(frozen=True)
class TrainConfig:
    dataset: str
    data_dir: str = "data"
    epochs: int = 30
    batch_size: int = 50
    learning_rate: float = 0.001
    base_seed: int = 0
    augmentation: AugmentSpec | None = None
    augment_cli: str = "strokeaug"
    # cap on training images, for fast smoke runs; None trains on everything
    limit_train: int | None = None

    def __post_init__(self):
        if self.dataset not in DATASETS:
            raise ValueError(f"dataset must be one of {DATASETS}, got {self.dataset!r}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be at least 1, got {self.epochs}")
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be at least 1, got {self.batch_size}")
        if self.learning_rate <= 0:
            raise ValueError(f"learning_rate must be positive, got {self.learning_rate}")
        if not 0 <= self.base_seed < 2**64:
            raise ValueError(f"base_seed must be an unsigned 64-bit value, got {self.base_seed}")
        if self.limit_train is not None and self.limit_train < 1:
            raise ValueError(f"limit_train must be at least 1, got {self.limit_train}")

    @property
    def label(self) -> str:
        return "None" if self.augmentation is None else self.augmentation.label

"""The training loop: per-epoch augmented data, Adam, best-of-epochs score."""

from __future__ import annotations

import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np
import torch
from torch.nn import functional as F

from . import datafiles
from .augment_cli import augment_file
from .config import TrainConfig
from .model import OcrNet

EVAL_BATCH = 1000


@dataclass(frozen=True)
class TrainResult:
    label: str
    dataset: str
    num_classes: int
    best_accuracy: float
    accuracies: list[float] = field(default_factory=list)

    @property
    def best_epoch(self) -> int:
        return int(np.argmax(self.accuracies)) + 1


def _to_batches(images: np.ndarray) -> torch.Tensor:
    # astype copies, so read-only arrays straight from file buffers are fine
    return torch.from_numpy(images.astype(np.float32)).div_(255.0).unsqueeze(1)


def evaluate(model: torch.nn.Module, images: torch.Tensor, labels: torch.Tensor) -> float:
    """Top-1 accuracy in percent."""
    model.eval()
    correct = 0
    with torch.no_grad():
        for start in range(0, len(images), EVAL_BATCH):
            logits = model(images[start : start + EVAL_BATCH])
            correct += int((logits.argmax(1) == labels[start : start + EVAL_BATCH]).sum())
    return 100.0 * correct / len(images)


def train(cfg: TrainConfig, log: Callable[[str], None] | None = None) -> TrainResult:
    """Train per ``cfg`` and report the best test accuracy over all epochs.

    When augmentation is configured, every epoch trains on a fresh
    dataset generated by the CLI with seed ``base_seed + epoch``; the
    test set is never augmented.
    """
    datafiles.require_files(cfg.data_dir, cfg.dataset)
    train_images, train_labels = datafiles.load_split(cfg.data_dir, cfg.dataset, "train")
    test_images, test_labels = datafiles.load_split(cfg.data_dir, cfg.dataset, "test")
    if cfg.limit_train is not None:
        train_images = train_images[: cfg.limit_train]
        train_labels = train_labels[: cfg.limit_train]

    num_classes = int(max(train_labels.max(), test_labels.max())) + 1
    torch.manual_seed(cfg.base_seed)
    model = OcrNet(num_classes)
    optimizer = torch.optim.Adam(model.parameters(), lr=cfg.learning_rate)

    labels_t = torch.from_numpy(train_labels.astype(np.int64))
    test_images_t = _to_batches(test_images)
    test_labels_t = torch.from_numpy(test_labels.astype(np.int64))

    accuracies: list[float] = []
    with tempfile.TemporaryDirectory(prefix="ocr-trainer-") as tmp:
        base_path = Path(tmp) / "train.idx"
        if cfg.augmentation is not None:
            datafiles.write_idx_images(base_path, train_images)

        for epoch in range(cfg.epochs):
            if cfg.augmentation is not None:
                epoch_path = Path(tmp) / f"epoch-{epoch}.idx"
                augment_file(
                    cfg.augment_cli, base_path, epoch_path,
                    cfg.augmentation, seed=cfg.base_seed + epoch,
                )
                epoch_images = datafiles.read_idx_images(epoch_path)
                epoch_path.unlink()
            else:
                epoch_images = train_images
            images_t = _to_batches(epoch_images)

            order = torch.randperm(
                len(images_t),
                generator=torch.Generator().manual_seed(cfg.base_seed + epoch),
            )
            model.train()
            for start in range(0, len(order), cfg.batch_size):
                batch = order[start : start + cfg.batch_size]
                optimizer.zero_grad()
                loss = F.cross_entropy(model(images_t[batch]), labels_t[batch])
                loss.backward()
                optimizer.step()

            accuracy = evaluate(model, test_images_t, test_labels_t)
            accuracies.append(accuracy)
            if log:
                log(f"epoch {epoch + 1}/{cfg.epochs}: test accuracy {accuracy:.2f}%")

    return TrainResult(
        label=cfg.label,
        dataset=cfg.dataset,
        num_classes=num_classes,
        best_accuracy=max(accuracies),
        accuracies=accuracies,
    )

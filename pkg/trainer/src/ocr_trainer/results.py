"""Result tables: one row per augmentation setting, markdown or CSV."""

from __future__ import annotations

import csv
import io
from typing import Iterable

from .training import TrainResult

COLUMNS = ("Augmentation", "Dataset", "Classes", "Best test accuracy (%)", "Best epoch")


def _rows(records: Iterable[TrainResult]) -> list[tuple[str, ...]]:
    return [
        (
            r.label,
            r.dataset,
            str(r.num_classes),
            f"{r.best_accuracy:.2f}",
            str(r.best_epoch),
        )
        for r in records
    ]


def results_markdown(records: Iterable[TrainResult]) -> str:
    lines = [
        "| " + " | ".join(COLUMNS) + " |",
        "| " + " | ".join("---" for _ in COLUMNS) + " |",
    ]
    for row in _rows(records):
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def results_csv(records: Iterable[TrainResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(COLUMNS)
    writer.writerows(_rows(records))
    return buf.getvalue()

"""Command line for single training runs; flags mirror TrainConfig."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .augment_cli import AugmentCliError
from .config import DATASETS, METHODS, MODES, AugmentSpec, TrainConfig
from .datafiles import MissingDataError
from .results import results_csv, results_markdown
from .training import train


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ocr-trainer",
        description="Train a small conv net on an IDX character dataset, "
        "optionally re-augmented every epoch through the strokeaug CLI.",
    )
    parser.add_argument("--dataset", required=True, choices=DATASETS)
    parser.add_argument("--data-dir", default="data",
                        help="directory holding one subdirectory per dataset (default data)")
    parser.add_argument("--epochs", type=int, default=30)
    parser.add_argument("--batch-size", type=int, default=50)
    parser.add_argument("--learning-rate", type=float, default=0.001,
                        help="Adam learning rate (default 0.001; 0.0005 is the other documented choice)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--method", choices=METHODS,
                        help="augmentation method; omit to train the unaugmented baseline")
    parser.add_argument("--mode", choices=MODES)
    parser.add_argument("--row-prob", type=float, default=0.5)
    parser.add_argument("--apply-prob", type=float, default=0.5)
    parser.add_argument("--augment-cli", default="strokeaug")
    parser.add_argument("--limit-train", type=int,
                        help="train on only the first N images (smoke runs)")
    parser.add_argument("--out-csv", help="append the result row to this CSV file")
    parser.add_argument("--out-markdown", help="append the result row to this markdown file")
    parser.add_argument("--quiet", action="store_true", help="suppress per-epoch lines")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if (args.method is None) != (args.mode is None):
        print("error: --method and --mode go together", file=sys.stderr)
        return 2
    augmentation = None
    if args.method is not None:
        augmentation = AugmentSpec(
            method=args.method, mode=args.mode,
            row_prob=args.row_prob, apply_prob=args.apply_prob,
        )
    try:
        cfg = TrainConfig(
            dataset=args.dataset,
            data_dir=args.data_dir,
            epochs=args.epochs,
            batch_size=args.batch_size,
            learning_rate=args.learning_rate,
            base_seed=args.seed,
            augmentation=augmentation,
            augment_cli=args.augment_cli,
            limit_train=args.limit_train,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        result = train(cfg, log=None if args.quiet else print)
    except MissingDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AugmentCliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    print(f"best test accuracy: {result.best_accuracy:.2f}% "
          f"(epoch {result.best_epoch}/{cfg.epochs}, {result.num_classes} classes)")
    if args.out_csv:
        _append(Path(args.out_csv), results_csv([result]))
    if args.out_markdown:
        _append(Path(args.out_markdown), results_markdown([result]))
    return 0


def _append(path: Path, table: str) -> None:
    # keep one header; append only data rows to an existing file
    lines = table.splitlines(keepends=True)
    if path.exists():
        body = [ln for ln in lines if not ln.startswith(("Augmentation,", "| Augmentation", "| ---"))]
        path.write_text(path.read_text() + "".join(body))
    else:
        path.write_text(table)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: dataset-to-dataset and dataset-to-figure runs.

Every behavior is a thin wrapper over the library; identical flags and
input files always produce identical output files.  Exit codes: 0 on
success, 1 on I/O failure, 2 on parse/validation errors (diagnostics name
the offending file and byte offset).

Inputs are uncompressed IDX files; gzipped downloads must be decompressed
first (`gunzip file.gz`), the parser will say so if handed one.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import idxio
from .augment import AugmentConfig
from .errors import IdxFormatError, StrokeAugError
from .pipeline import PipelineConfig, augment_dataset, augmented_mask, ink_stats
from .pixelgrid import GrayImage, LabeledDataset
from .render import GridSpec, render_grid


class CliError(Exception):
    """Validation failure at the CLI layer; maps to exit code 2."""


def _read_bytes(path: str) -> bytes:
    return Path(path).read_bytes()


def _load_dataset(images_path: str, labels_path: str | None) -> LabeledDataset:
    images = _parse_file(images_path, idxio.read_images_array)
    if labels_path is None:
        labels = np.zeros(len(images), dtype=np.int64)
        num_classes = 1
    else:
        labels = _parse_file(labels_path, idxio.read_labels)
        if len(labels) != len(images):
            raise CliError(
                f"{images_path} has {len(images)} images but {labels_path} has "
                f"{len(labels)} labels"
            )
        num_classes = int(labels.max()) + 1 if len(labels) else 1
    return LabeledDataset(images, labels, num_classes)


def _parse_file(path: str, reader):
    data = _read_bytes(path)
    try:
        return reader(data)
    except IdxFormatError as exc:
        raise CliError(f"{path}: byte offset {exc.offset}: {exc}") from exc


def _augment_config(args) -> AugmentConfig:
    return AugmentConfig(
        method=args.method,
        mode=args.mode,
        threshold=args.threshold,
        k=args.k,
        row_prob=args.row_prob,
    )


def cmd_augment(args) -> int:
    cfg = PipelineConfig(
        augment=_augment_config(args), apply_prob=args.apply_prob, base_seed=args.seed
    )
    ds = _load_dataset(args.images, args.labels)
    if args.out_labels and args.labels is None:
        raise CliError("--out-labels needs --labels to copy from")
    result = augment_dataset(ds, cfg, workers=args.workers)
    Path(args.out).write_bytes(idxio.write_images_array(result.images))
    if args.out_labels:
        Path(args.out_labels).write_bytes(idxio.write_labels(result.labels))
    modified = int(augmented_mask(len(ds), cfg).sum())
    summary = {
        "command": "augment",
        "images": len(ds),
        "modified": modified,
        "seed": args.seed,
        "method": args.method,
        "mode": args.mode,
        "out": args.out,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        print(
            f"processed={len(ds)} modified={modified} seed={args.seed} "
            f"method={args.method} mode={args.mode}"
        )
    return 0


def _select_indices(args, count: int) -> list[int]:
    if args.indices is not None:
        try:
            indices = [int(tok) for tok in args.indices.split(",") if tok.strip() != ""]
        except ValueError as exc:
            raise CliError(f"--indices must be comma-separated integers: {exc}") from exc
        bad = [i for i in indices if not 0 <= i < count]
        if bad:
            raise CliError(f"--indices {bad} out of range for {count} images (valid: 0..{count - 1})")
        return indices
    if args.count is None:
        return list(range(min(10, count)))
    if args.count > count:
        raise CliError(f"--count {args.count} exceeds the {count} images available")
    return list(range(args.count))


def cmd_grid(args) -> int:
    images = _parse_file(args.images, idxio.read_images_array)
    indices = _select_indices(args, len(images))
    cols = args.cols
    rows = args.rows if args.rows is not None else max(1, -(-len(indices) // cols))
    spec = GridSpec(rows=rows, cols=cols, cell_border=args.border, scale=args.scale)
    picked = [GrayImage(images[i]) for i in indices]
    png, manifest = render_grid(
        picked,
        spec,
        tags=args.tag,
        source_indices=indices,
        cell_size=images.shape[1:],
    )
    Path(args.out).write_bytes(png)
    manifest_path = args.manifest or str(Path(args.out).with_suffix(".json"))
    Path(manifest_path).write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"cells={len(manifest)} grid={rows}x{cols} out={args.out} manifest={manifest_path}")
    return 0


def cmd_stats(args) -> int:
    ds = _load_dataset(args.images, args.labels)
    records = ink_stats(ds)
    mean_ink = float(np.mean([r.ink_sum for r in records])) if records else 0.0
    mean_nonzero = float(np.mean([r.nonzero for r in records])) if records else 0.0
    summary = {
        "command": "stats",
        "count": len(ds),
        "height": ds.height if len(ds) else 0,
        "width": ds.width if len(ds) else 0,
        "mean_ink_sum": mean_ink,
        "mean_nonzero": mean_nonzero,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        print(
            f"count={summary['count']} dims={summary['height']}x{summary['width']} "
            f"mean_ink_sum={mean_ink:.2f} mean_nonzero={mean_nonzero:.2f}"
        )
    if args.per_image:
        for i, rec in enumerate(records):
            print(json.dumps({"index": i, "nonzero": rec.nonzero, "ink_sum": rec.ink_sum}))
    return 0


def cmd_info(args) -> int:
    with open(args.file, "rb") as fh:
        data = fh.read(20)  # magic + up to 4 extents; never the data section
    try:
        magic, type_code, rank, extents = idxio.read_header(data)
    except IdxFormatError as exc:
        raise CliError(f"{args.file}: byte offset {exc.offset}: {exc}") from exc
    print(f"magic={magic.hex(' ')} type_code=0x{type_code:02x} rank={rank} "
          f"extents={'x'.join(str(e) for e in extents)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strokeaug",
        description="Deterministic stroke-level augmentation for handwritten-character IDX datasets.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_aug = sub.add_parser("augment", help="augment an IDX dataset into a new IDX dataset")
    p_aug.add_argument("--images", required=True, help="input IDX image file")
    p_aug.add_argument("--labels", help="input IDX label file (passed through)")
    p_aug.add_argument("--out", required=True, help="output IDX image file")
    p_aug.add_argument("--out-labels", help="output IDX label file")
    p_aug.add_argument(
        "--method", required=True, choices=["thick", "thin", "elongate", "lineerase"]
    )
    p_aug.add_argument("--mode", required=True, choices=["complete", "random", "x", "y"])
    p_aug.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p_aug.add_argument("--apply-prob", type=float, default=0.5,
                       help="per-image probability of augmenting at all (default 0.5)")
    p_aug.add_argument("--row-prob", type=float, default=0.5,
                       help="per-row probability in random mode (default 0.5)")
    p_aug.add_argument("--k", type=int, default=10,
                       help="filled pixels are dimmed by a draw from [0, k-1] (default 10)")
    p_aug.add_argument("--threshold", type=int, default=10,
                       help="intensities above this count as ink (default 10)")
    p_aug.add_argument("--workers", type=int, default=None,
                       help="parallel workers; output is identical for any value")
    p_aug.add_argument("--json", action="store_true", help="print the summary as JSON")
    p_aug.set_defaults(func=cmd_augment)

    p_grid = sub.add_parser("grid", help="render samples to a PNG grid plus JSON manifest")
    p_grid.add_argument("--images", required=True, help="input IDX image file")
    p_grid.add_argument("--out", required=True, help="output PNG path")
    p_grid.add_argument("--manifest", help="manifest JSON path (default: PNG path with .json)")
    group = p_grid.add_mutually_exclusive_group()
    group.add_argument("--count", type=int, help="render the first N images (default min(10, all))")
    group.add_argument("--indices", help="comma-separated image indices to render")
    p_grid.add_argument("--rows", type=int, help="grid rows (default: fit the count)")
    p_grid.add_argument("--cols", type=int, default=10, help="grid columns (default 10)")
    p_grid.add_argument("--scale", type=int, default=4, help="integer magnification (default 4)")
    p_grid.add_argument("--border", type=int, default=1, help="border thickness (default 1)")
    p_grid.add_argument("--tag", help="method tag recorded for every cell in the manifest")
    p_grid.set_defaults(func=cmd_grid)

    p_stats = sub.add_parser("stats", help="dataset ink statistics")
    p_stats.add_argument("--images", required=True, help="input IDX image file")
    p_stats.add_argument("--labels", help="input IDX label file")
    p_stats.add_argument("--per-image", action="store_true",
                         help="also print one JSON line per image")
    p_stats.add_argument("--json", action="store_true", help="print the summary as JSON")
    p_stats.set_defaults(func=cmd_stats)

    p_info = sub.add_parser("info", help="print an IDX file's header without loading data")
    p_info.add_argument("file", help="IDX file to inspect")
    p_info.set_defaults(func=cmd_info)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StrokeAugError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

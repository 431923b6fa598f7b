"""Render before/after sample sheets for every augmentation method.

Reads an IDX image file, augments the first N images with each method at
apply probability 1, and writes one PNG sheet plus JSON manifest per
method (and one for the untouched originals) into the output directory.

Usage:
    python scripts/make_sample_sheets.py --images data/train-images-idx3-ubyte \
        --out-dir sheets/ --count 10 --seed 6
"""

import argparse
import json
from pathlib import Path

import numpy as np

from strokeaug import idxio
from strokeaug.augment import AugmentConfig
from strokeaug.pipeline import PipelineConfig, augment_dataset
from strokeaug.pixelgrid import GrayImage, LabeledDataset
from strokeaug.render import GridSpec, render_grid

METHOD_MODES = [
    ("thick", "complete"),
    ("thin", "complete"),
    ("elongate", "x"),
    ("lineerase", "x"),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--images", required=True, help="input IDX image file")
    parser.add_argument("--out-dir", required=True)
    parser.add_argument("--count", type=int, default=10)
    parser.add_argument("--seed", type=int, default=6)
    parser.add_argument("--scale", type=int, default=4)
    args = parser.parse_args()

    stack = idxio.read_images_array(Path(args.images).read_bytes())[: args.count]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    sheets = {"original": stack}
    ds = LabeledDataset(stack, np.zeros(len(stack), dtype=np.int64), num_classes=1)
    for method, mode in METHOD_MODES:
        cfg = PipelineConfig(
            AugmentConfig(method, mode), apply_prob=1.0, base_seed=args.seed
        )
        sheets[f"{method}-{mode}"] = augment_dataset(ds, cfg).images

    spec = GridSpec(rows=1, cols=len(stack), cell_border=1, scale=args.scale)
    for name, imgs in sheets.items():
        png, manifest = render_grid([GrayImage(a) for a in imgs], spec, tags=name)
        (out_dir / f"{name}.png").write_bytes(png)
        (out_dir / f"{name}.json").write_text(json.dumps(manifest, indent=2) + "\n")
        print(f"wrote {out_dir / f'{name}.png'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

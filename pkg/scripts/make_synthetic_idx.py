"""Generate a synthetic handwriting-like IDX dataset.

Each image is a few bright random polylines on black, which is enough
structure for the stroke kernels to bite on.  Useful for demos and
pipeline checks when no real scan data is on disk.

Usage:
    python scripts/make_synthetic_idx.py --count 1000 --out data/synthetic-images.idx \
        --labels-out data/synthetic-labels.idx --seed 7
"""

import argparse
from pathlib import Path

import numpy as np

from strokeaug import idxio


def draw_glyph(rs: np.random.RandomState, size: int) -> np.ndarray:
    img = np.zeros((size, size), dtype=np.uint8)
    points = rs.randint(4, size - 4, size=(rs.randint(3, 6), 2))
    for (r0, c0), (r1, c1) in zip(points[:-1], points[1:]):
        steps = max(abs(r1 - r0), abs(c1 - c0), 1)
        rows = np.linspace(r0, r1, steps + 1).round().astype(int)
        cols = np.linspace(c0, c1, steps + 1).round().astype(int)
        img[rows, cols] = rs.randint(180, 256)
    return img


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--size", type=int, default=28)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", required=True, help="output IDX image file")
    parser.add_argument("--labels-out", help="optional IDX label file (random 0-9 labels)")
    args = parser.parse_args()

    rs = np.random.RandomState(args.seed)
    stack = np.stack([draw_glyph(rs, args.size) for _ in range(args.count)])
    Path(args.out).write_bytes(idxio.write_images_array(stack))
    print(f"wrote {args.count} {args.size}x{args.size} images to {args.out}")
    if args.labels_out:
        labels = rs.randint(0, 10, size=args.count).astype(np.uint8)
        Path(args.labels_out).write_bytes(idxio.write_labels(labels))
        print(f"wrote {args.count} labels to {args.labels_out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Per-epoch dataset generation through the augmentation CLI.

Augmentation semantics live in exactly one place, the `strokeaug`
command; this module only shells out to it and reads the files back.
"""

from __future__ import annotations

import json
import subprocess
from pathlib import Path

from .config import AugmentSpec


class AugmentCliError(RuntimeError):
    """The augmentation CLI failed; carries its stderr."""


def augment_file(
    cli: str, images_in: str | Path, images_out: str | Path, spec: AugmentSpec, seed: int
) -> dict:
    """Run one augmentation pass; returns the CLI's JSON summary."""
    cmd = [
        cli, "augment",
        "--images", str(images_in),
        "--out", str(images_out),
        "--method", spec.method,
        "--mode", spec.mode,
        "--seed", str(seed),
        "--apply-prob", str(spec.apply_prob),
        "--row-prob", str(spec.row_prob),
        "--json",
    ]
    try:
        proc = subprocess.run(cmd, capture_output=True, text=True)
    except FileNotFoundError as exc:
        raise AugmentCliError(
            f"augmentation CLI {cli!r} not found; install it or pass --augment-cli"
        ) from exc
    if proc.returncode != 0:
        raise AugmentCliError(
            f"{' '.join(cmd)} exited {proc.returncode}: {proc.stderr.strip()}"
        )
    return json.loads(proc.stdout)

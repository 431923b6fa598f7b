"""Fixtures only; importable helpers live in imagegen.py."""

from __future__ import annotations

import numpy as np
import pytest

from imagegen import MNIST_IMAGES, synthetic_glyphs


@pytest.fixture(scope="session")
def sample_images_28() -> np.ndarray:
    """Ten 28x28 character images: real MNIST when available, synthetic otherwise."""
    if MNIST_IMAGES.exists():
        from strokeaug import idxio

        return idxio.read_images_array(MNIST_IMAGES.read_bytes())[:10]
    return synthetic_glyphs(10)

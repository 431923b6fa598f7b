"""Bit-exact reader/writer for the IDX binary container (MNIST family).

Layout: two zero bytes, a type-code byte (0x08 = unsigned byte data), a
rank byte, ``rank`` big-endian 32-bit extents, then raw data bytes.
Image files have rank 3 (count, height, width); label files rank 1.

``write_*`` and ``read_*`` are mutual inverses, byte for byte.  Gzipped
inputs are rejected with a hint rather than inflated here; decompress
before reading.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import (
    BadMagicError,
    CountOverflowError,
    EmptyInputError,
    HeterogeneousDimsError,
    LabelOverflowError,
    TrailingBytesError,
    TruncatedDataError,
)
from .pixelgrid import GrayImage

_TYPE_UBYTE = 0x08
_GZIP_MAGIC = b"\x1f\x8b"
_MAX_EXTENT = (1 << 32) - 1


def _check_magic(data: bytes, rank: int, kind: str) -> None:
    if data[:2] == _GZIP_MAGIC:
        raise BadMagicError(
            f"{kind} stream starts with the gzip magic 1f 8b; decompress it first "
            "(e.g. `gunzip`)",
            offset=0,
        )
    if len(data) < 4:
        raise TruncatedDataError(
            f"{kind} stream has only {len(data)} bytes, need at least a 4-byte magic",
            offset=len(data),
        )
    expected = bytes((0, 0, _TYPE_UBYTE, rank))
    if data[:4] != expected:
        raise BadMagicError(
            f"bad {kind} magic {data[:4].hex(' ')}, expected {expected.hex(' ')}",
            offset=0,
        )


def _check_length(data: bytes, header_len: int, expected: int, kind: str) -> None:
    # Validate against the real stream length before any allocation sized
    # from header counts.
    actual = len(data) - header_len
    if actual < expected:
        raise TruncatedDataError(
            f"{kind} stream promises {expected} data bytes but carries {actual}",
            offset=len(data),
        )
    if actual > expected:
        raise TrailingBytesError(
            f"{kind} stream carries {actual - expected} bytes past the promised data",
            offset=header_len + expected,
        )


def read_header(data: bytes) -> tuple[bytes, int, int, tuple[int, ...]]:
    """Parse (magic, type_code, rank, extents) without touching the data.

    Validates only the leading zero bytes, type code, and a rank of 1 or 3;
    callers decide whether the rank fits their use.
    """
    if data[:2] == _GZIP_MAGIC:
        raise BadMagicError(
            "stream starts with the gzip magic 1f 8b; decompress it first (e.g. `gunzip`)",
            offset=0,
        )
    if len(data) < 4:
        raise TruncatedDataError(
            f"stream has only {len(data)} bytes, need at least a 4-byte magic",
            offset=len(data),
        )
    if data[:2] != b"\x00\x00" or data[2] != _TYPE_UBYTE or data[3] not in (1, 3):
        raise BadMagicError(
            f"bad magic {data[:4].hex(' ')}, expected 00 00 08 01 or 00 00 08 03",
            offset=0,
        )
    rank = data[3]
    header_len = 4 + 4 * rank
    if len(data) < header_len:
        raise TruncatedDataError(
            f"stream ends inside the header: {len(data)} bytes, need {header_len}",
            offset=len(data),
        )
    extents = struct.unpack(f">{rank}I", data[4:header_len])
    return data[:4], data[2], rank, extents


def read_images_array(data: bytes) -> np.ndarray:
    """Decode an image file into a (count, height, width) uint8 array."""
    _check_magic(data, rank=3, kind="image")
    if len(data) < 16:
        raise TruncatedDataError(
            f"image stream ends inside the header: {len(data)} bytes, need 16",
            offset=len(data),
        )
    count, height, width = struct.unpack(">3I", data[4:16])
    if count > 0 and (height == 0 or width == 0):
        raise BadMagicError(
            f"image header declares {count} images of impossible size {height}x{width}",
            offset=4,
        )
    _check_length(data, 16, count * height * width, kind="image")
    arr = np.frombuffer(data, dtype=np.uint8, offset=16).reshape(count, height, width)
    return arr.copy()


def read_images(data: bytes) -> list[GrayImage]:
    """Decode an image file; byte i of a record maps directly to intensity."""
    arr = read_images_array(data)
    return [GrayImage(arr[i]) for i in range(len(arr))]


def write_images_array(images: np.ndarray) -> bytes:
    """Encode a (count, height, width) uint8 array as an IDX image file."""
    images = np.asarray(images, dtype=np.uint8)
    if images.ndim != 3:
        raise HeterogeneousDimsError(
            f"expected a (count, height, width) stack, got shape {images.shape}"
        )
    count, height, width = images.shape
    if count == 0:
        raise EmptyInputError("cannot write zero images: output dimensions indeterminable")
    if count > _MAX_EXTENT:
        raise CountOverflowError(f"{count} images exceed the 32-bit extent limit")
    header = struct.pack(">4B3I", 0, 0, _TYPE_UBYTE, 3, count, height, width)
    return header + np.ascontiguousarray(images).tobytes()


def write_images(images) -> bytes:
    """Encode a sequence of GrayImage, all sharing one size."""
    imgs = list(images)
    if not imgs:
        raise EmptyInputError("cannot write zero images: output dimensions indeterminable")
    first = imgs[0]
    for i, img in enumerate(imgs):
        if (img.height, img.width) != (first.height, first.width):
            raise HeterogeneousDimsError(
                f"image 0 is {first.width}x{first.height} but image {i} is "
                f"{img.width}x{img.height}"
            )
    return write_images_array(np.stack([img.pixels for img in imgs]))


def read_labels(data: bytes) -> np.ndarray:
    """Decode a label file into a (count,) int64 array, file order."""
    _check_magic(data, rank=1, kind="label")
    if len(data) < 8:
        raise TruncatedDataError(
            f"label stream ends inside the header: {len(data)} bytes, need 8",
            offset=len(data),
        )
    (count,) = struct.unpack(">I", data[4:8])
    _check_length(data, 8, count, kind="label")
    return np.frombuffer(data, dtype=np.uint8, offset=8).astype(np.int64)


def write_labels(labels) -> bytes:
    """Encode class indices as an IDX label file; every label must fit a byte."""
    labs = np.asarray(labels)
    if labs.ndim != 1:
        raise ValueError(f"labels must be one-dimensional, got shape {labs.shape}")
    if labs.size:
        if not np.issubdtype(labs.dtype, np.integer):
            raise ValueError(f"labels must be integers, got dtype {labs.dtype}")
        if labs.min() < 0:
            raise ValueError("labels must be non-negative")
        if labs.max() > 255:
            raise LabelOverflowError(f"label {int(labs.max())} does not fit an unsigned byte")
    if labs.size > _MAX_EXTENT:
        raise CountOverflowError(f"{labs.size} labels exceed the 32-bit extent limit")
    header = struct.pack(">4BI", 0, 0, _TYPE_UBYTE, 1, labs.size)
    return header + labs.astype(np.uint8).tobytes()

"""Exception types shared across the package.

Parse errors carry a byte ``offset`` so the CLI can point at the exact
location in the offending file.
"""

from __future__ import annotations


class StrokeAugError(Exception):
    """Base class for all package-specific errors."""


class IdxFormatError(StrokeAugError):
    """Malformed IDX byte stream."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(message)
        self.offset = offset


class BadMagicError(IdxFormatError):
    """First four bytes do not form the expected IDX magic."""


class TruncatedDataError(IdxFormatError):
    """Stream ends before the header-promised data does."""


class TrailingBytesError(IdxFormatError):
    """Stream continues past the header-promised data."""


class HeterogeneousDimsError(StrokeAugError):
    """Images of differing dimensions where identical ones are required."""


class EmptyInputError(HeterogeneousDimsError):
    """No images given, so output dimensions are indeterminable."""


class CountOverflowError(StrokeAugError):
    """More items than a 32-bit extent can describe."""


class LabelOverflowError(StrokeAugError):
    """Label value outside the unsigned byte range."""


class GridOverflowError(StrokeAugError):
    """More images than the grid has cells."""

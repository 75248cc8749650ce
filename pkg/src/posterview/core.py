"""Frame primitives shared by every stage of the pipeline.

A color frame is a C-contiguous ``(height, width, 3)`` uint8 array holding
row-major interleaved RGB; a gray frame is ``(height, width)`` uint8 luma.
All arithmetic that feeds an 8-bit result goes through exact integer math so
outputs are bit-reproducible: rounding is always round-half-away-from-zero,
implemented as ``(num + den // 2) // den`` on non-negative integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Broadcast luma weights as integer per-mille factors; 299 + 587 + 114 = 1000,
# so equal channels map to themselves exactly.
_LUMA_R, _LUMA_G, _LUMA_B = 299, 587, 114


def ensure_frame(frame: np.ndarray) -> np.ndarray:
    """Validate an RGB frame, returning it unchanged."""
    if not isinstance(frame, np.ndarray):
        raise TypeError(f"frame must be a numpy array, got {type(frame).__name__}")
    if frame.ndim != 3 or frame.shape[2] != 3:
        raise ValueError(f"frame must have shape (h, w, 3), got {frame.shape}")
    if frame.dtype != np.uint8:
        raise ValueError(f"frame must be uint8, got {frame.dtype}")
    if frame.shape[0] < 1 or frame.shape[1] < 1:
        raise ValueError(f"frame must be at least 1x1, got {frame.shape}")
    return frame


def ensure_gray(gray: np.ndarray) -> np.ndarray:
    """Validate a grayscale frame, returning it unchanged."""
    if not isinstance(gray, np.ndarray):
        raise TypeError(f"gray frame must be a numpy array, got {type(gray).__name__}")
    if gray.ndim != 2:
        raise ValueError(f"gray frame must have shape (h, w), got {gray.shape}")
    if gray.dtype != np.uint8:
        raise ValueError(f"gray frame must be uint8, got {gray.dtype}")
    if gray.shape[0] < 1 or gray.shape[1] < 1:
        raise ValueError(f"gray frame must be at least 1x1, got {gray.shape}")
    return gray


@dataclass(frozen=True)
class Roi:
    """Rectangular region of interest, zero-based pixel coordinates."""

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self) -> None:
        if self.w < 1 or self.h < 1:
            raise ValueError(f"roi extents must be >= 1, got w={self.w} h={self.h}")
        if self.x < 0 or self.y < 0:
            raise ValueError(f"roi offsets must be >= 0, got x={self.x} y={self.y}")

    def check_within(self, width: int, height: int) -> None:
        if self.x + self.w > width or self.y + self.h > height:
            raise ValueError(
                f"roi {self.x},{self.y},{self.w},{self.h} exceeds frame {width}x{height}"
            )


def to_gray(frame: np.ndarray) -> np.ndarray:
    """Convert RGB to 8-bit luma with 0.299/0.587/0.114 weights.

    Computed as ``(299*R + 587*G + 114*B + 500) // 1000`` so the result is the
    exact half-away-from-zero rounding of the decimal-weighted sum; a float
    path would misround values that land exactly on .5.
    """
    ensure_frame(frame)
    c = frame.astype(np.uint32)
    luma = (_LUMA_R * c[:, :, 0] + _LUMA_G * c[:, :, 1] + _LUMA_B * c[:, :, 2] + 500) // 1000
    return luma.astype(np.uint8)


def rms_contrast(gray: np.ndarray, roi: Roi) -> float:
    """Population standard deviation of luma inside the roi.

    Uses exact integer sums so the value is independent of pixel order.
    """
    ensure_gray(gray)
    roi.check_within(gray.shape[1], gray.shape[0])
    region = gray[roi.y : roi.y + roi.h, roi.x : roi.x + roi.w].astype(np.int64)
    n = region.size
    s = int(region.sum())
    ss = int((region * region).sum())
    # population variance = (n*ss - s^2) / n^2, exact in python ints
    var = (n * ss - s * s) / (n * n)
    return float(np.sqrt(var))

"""Simulated display glare and visibility scoring for the enhancement methods.

Glare is modeled as a convex blend toward white (veiling luminance): uniform
for flat sky reflections, radial Gaussian for spot highlights.  Three metrics
quantify how well an enhanced frame survives it: RMS luma contrast in a
landmark region, the fraction of strong edges that stay strong, and the
number of distinct colors left in the region.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Roi, ensure_frame, rms_contrast, to_gray
from .methods import EnhanceParams, Method, enhance, method_name

DEFAULT_EDGE_TAU = 32.0  # of the 1020 peak single-axis Sobel response


@dataclass(frozen=True)
class GlareSpec:
    """Glare field: overall strength in [0, 1] plus a spatial mask.

    mask "uniform" covers the frame evenly; "radial" is a Gaussian spot at
    (cx, cy) with the given sigma, all in pixels.
    """

    strength: float
    mask: str = "uniform"
    cx: float | None = None
    cy: float | None = None
    sigma: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.strength <= 1.0:
            raise ValueError(f"strength must be in [0, 1], got {self.strength}")
        if self.mask == "radial":
            if self.cx is None or self.cy is None or self.sigma is None:
                raise ValueError("radial mask needs cx, cy, and sigma")
            if not self.sigma > 0:
                raise ValueError(f"sigma must be > 0, got {self.sigma}")
        elif self.mask != "uniform":
            raise ValueError(f"mask must be 'uniform' or 'radial', got {self.mask!r}")

    def mask_values(self, width: int, height: int) -> np.ndarray:
        """Per-pixel mask in [0, 1], shape (height, width)."""
        if self.mask == "uniform":
            return np.ones((height, width), dtype=np.float64)
        xs = np.arange(width, dtype=np.float64) - self.cx
        ys = np.arange(height, dtype=np.float64) - self.cy
        d2 = ys[:, None] ** 2 + xs[None, :] ** 2
        return np.exp(-d2 / (2.0 * self.sigma**2))

    def to_json_dict(self) -> dict:
        out: dict = {"strength": self.strength, "mask": self.mask}
        if self.mask == "radial":
            out.update(cx=self.cx, cy=self.cy, sigma=self.sigma)
        return out


def apply_glare(frame: np.ndarray, spec: GlareSpec) -> np.ndarray:
    """Blend each pixel toward white by g = strength * mask(x, y)."""
    ensure_frame(frame)
    h, w = frame.shape[:2]
    g = spec.strength * spec.mask_values(w, h)
    blended = (1.0 - g)[:, :, None] * frame.astype(np.float64) + (g * 255.0)[:, :, None]
    return np.floor(blended + 0.5).clip(0, 255).astype(np.uint8)


def _sobel_magnitude(gray: np.ndarray) -> np.ndarray:
    """3x3 Sobel response on luma with replicated borders.

    Magnitude is the larger of |horizontal| and |vertical| responses, peaking
    at 1020 on 8-bit input.  Integer arithmetic, so results are exact.
    """
    p = np.pad(gray.astype(np.int32), 1, mode="edge")
    gx = (
        (p[:-2, 2:] + 2 * p[1:-1, 2:] + p[2:, 2:])
        - (p[:-2, :-2] + 2 * p[1:-1, :-2] + p[2:, :-2])
    )
    gy = (
        (p[2:, :-2] + 2 * p[2:, 1:-1] + p[2:, 2:])
        - (p[:-2, :-2] + 2 * p[:-2, 1:-1] + p[:-2, 2:])
    )
    return np.maximum(np.abs(gx), np.abs(gy))


def edge_survival(reference: np.ndarray, degraded: np.ndarray, tau: float = DEFAULT_EDGE_TAU) -> float:
    """Fraction of the reference's strong-edge pixels still strong in degraded.

    Returns 1.0 when the reference has no edge at or above tau.
    """
    ensure_frame(reference)
    ensure_frame(degraded)
    if reference.shape != degraded.shape:
        raise ValueError(f"frame dimensions differ: {reference.shape} vs {degraded.shape}")
    if not tau > 0:
        raise ValueError(f"tau must be > 0, got {tau}")
    ref_strong = _sobel_magnitude(to_gray(reference)) >= tau
    total = int(ref_strong.sum())
    if total == 0:
        return 1.0
    deg_strong = _sobel_magnitude(to_gray(degraded)) >= tau
    return int((ref_strong & deg_strong).sum()) / total


def distinct_colors(frame: np.ndarray, roi: Roi | None = None) -> int:
    """Number of distinct RGB values, optionally restricted to a roi."""
    ensure_frame(frame)
    view = frame
    if roi is not None:
        roi.check_within(frame.shape[1], frame.shape[0])
        view = frame[roi.y : roi.y + roi.h, roi.x : roi.x + roi.w]
    packed = view.reshape(-1, 3).astype(np.uint32)
    keys = (packed[:, 0] << 16) | (packed[:, 1] << 8) | packed[:, 2]
    return int(np.unique(keys).size)


@dataclass(frozen=True)
class MethodVisibility:
    """Per-method post-glare visibility measurements."""

    method: str
    rms: float
    edge_survival: float
    colors: int


@dataclass(frozen=True)
class VisibilityReport:
    roi: Roi
    glare: GlareSpec
    methods: list[MethodVisibility]

    def to_json_dict(self) -> dict:
        return {
            "roi": [self.roi.x, self.roi.y, self.roi.w, self.roi.h],
            "glare": self.glare.to_json_dict(),
            "methods": [
                {
                    "method": m.method,
                    "rms": m.rms,
                    "edge_survival": m.edge_survival,
                    "colors": m.colors,
                }
                for m in self.methods
            ],
        }


def evaluate_methods(
    frame: np.ndarray,
    roi: Roi,
    spec: GlareSpec,
    params: EnhanceParams = EnhanceParams(),
    tau: float = DEFAULT_EDGE_TAU,
) -> VisibilityReport:
    """Score every enhancement method under the given glare.

    For each method: enhance, degrade with glare, then measure roi contrast,
    edge survival against the pre-glare enhanced frame, and the distinct
    color count inside the roi.
    """
    ensure_frame(frame)
    roi.check_within(frame.shape[1], frame.shape[0])
    entries = []
    for method in Method:
        enhanced = enhance(frame, method, params)
        degraded = apply_glare(enhanced, spec)
        entries.append(
            MethodVisibility(
                method=method_name(method),
                rms=rms_contrast(to_gray(degraded), roi),
                edge_survival=edge_survival(enhanced, degraded, tau),
                colors=distinct_colors(degraded, roi),
            )
        )
    return VisibilityReport(roi=roi, glare=spec, methods=entries)

from __future__ import annotations

import numpy as np
import pytest


def random_frame(rng: np.random.Generator, max_side: int = 16, min_side: int = 1) -> np.ndarray:
    h = int(rng.integers(min_side, max_side + 1))
    w = int(rng.integers(min_side, max_side + 1))
    return rng.integers(0, 256, size=(h, w, 3), dtype=np.uint8)


def random_gray_frame(rng: np.random.Generator, max_side: int = 16) -> np.ndarray:
    """Random frame with equal channels (luma == channel value exactly)."""
    h = int(rng.integers(1, max_side + 1))
    w = int(rng.integers(1, max_side + 1))
    v = rng.integers(0, 256, size=(h, w), dtype=np.uint8)
    return np.repeat(v[:, :, None], 3, axis=2)


def permute_pixels(frame: np.ndarray, perm: np.ndarray) -> np.ndarray:
    h, w = frame.shape[:2]
    return frame.reshape(h * w, 3)[perm].reshape(h, w, 3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0xC0FFEE)

"""Synthetic outdoor test scene for demos and golden fixtures.

A deterministic stand-in for a real photo: graded sky, sun disk, a dark
tower with an arched opening, tree line, and textured ground.  The texture
comes from the benchmark LCG so the scene is bit-identical everywhere.
"""

from __future__ import annotations

import numpy as np

from .bench import lcg_frame


def outdoor_scene(width: int = 96, height: int = 64) -> np.ndarray:
    """Render the scene at the given size (minimum 16x16)."""
    if width < 16 or height < 16:
        raise ValueError(f"scene needs at least 16x16, got {width}x{height}")
    ys = np.arange(height, dtype=np.float64)[:, None]
    xs = np.arange(width, dtype=np.float64)[None, :]
    img = np.zeros((height, width, 3), dtype=np.float64)

    horizon = int(height * 0.72)

    # sky: pale blue fading toward a bright horizon
    t = np.clip(ys / max(horizon, 1), 0.0, 1.0)
    img[:, :, 0] = 110 + 110 * t
    img[:, :, 1] = 150 + 85 * t
    img[:, :, 2] = 225 + 25 * t

    # sun disk upper left
    sun_r = height * 0.12
    sun = ((xs - width * 0.18) ** 2 + (ys - height * 0.16) ** 2) <= sun_r**2
    img[sun] = (255.0, 245.0, 215.0)

    # ground: green-brown band below the horizon
    ground = np.broadcast_to(ys >= horizon, (height, width))
    img[ground] = (88.0, 110.0, 52.0)

    # tree line hugging the horizon
    trees = (ys >= horizon - height * 0.08) & (ys < horizon) & ((xs // 7) % 2 == 0)
    trees = np.broadcast_to(trees, (height, width))
    img[trees] = (34.0, 72.0, 30.0)

    # tower: dark brick column right of center with a lighter arch opening
    tx0, tx1 = int(width * 0.62), int(width * 0.74)
    ty0 = int(height * 0.18)
    tower = (xs >= tx0) & (xs < tx1) & (ys >= ty0) & (ys < horizon)
    tower = np.broadcast_to(tower, (height, width))
    img[tower] = (70.0, 48.0, 40.0)
    ax = (tx0 + tx1) / 2.0
    arch = ((xs - ax) ** 2 / ((tx1 - tx0) * 0.22) ** 2 + (ys - ty0 - height * 0.12) ** 2 / (height * 0.07) ** 2) <= 1.0
    arch = np.broadcast_to(arch, (height, width))
    img[arch & tower] = (150.0, 132.0, 110.0)

    # deterministic fine texture so flat regions are not literally constant
    noise = lcg_frame(width, height).astype(np.float64)
    img += (noise - 127.5) * 0.08
    return np.clip(np.floor(img + 0.5), 0, 255).astype(np.uint8)

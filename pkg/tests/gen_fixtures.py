"""Regenerate the committed image fixtures under tests/data/.

Run from the repository root:  python3 tests/gen_fixtures.py

The otsu golden is produced by the brute-force oracle, not the library path
it later verifies; the grid golden pins the montage bytes across runs.
"""

from __future__ import annotations

import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from posterview.methods import comparison_grid
from posterview.ppm import write_ppm
from posterview.sample import outdoor_scene

from oracles import otsu_level_oracle

DATA = pathlib.Path(__file__).parent / "data"


def bimodal_frame() -> np.ndarray:
    """Two gray populations around 60 and 190 with mild deterministic jitter."""
    rng = np.random.default_rng(7)
    values = np.where(rng.random((24, 32)) < 0.45, 60, 190).astype(np.int64)
    values += rng.integers(-12, 13, size=values.shape)
    values = np.clip(values, 0, 255).astype(np.uint8)
    return np.repeat(values[:, :, None], 3, axis=2)


def oracle_otsu_output(frame: np.ndarray) -> np.ndarray:
    """Threshold map built from the oracle level, bypassing the library path."""
    luma = frame[:, :, 0]  # fixture is gray, luma == channel value
    level = otsu_level_oracle(luma)
    out = np.zeros_like(frame)
    out[luma > level] = 255
    return out


def main() -> None:
    DATA.mkdir(exist_ok=True)
    scene = outdoor_scene(96, 64)
    (DATA / "outdoor.ppm").write_bytes(write_ppm(scene))
    (DATA / "outdoor_grid.golden.ppm").write_bytes(write_ppm(comparison_grid(scene)))

    frame = bimodal_frame()
    (DATA / "bimodal.ppm").write_bytes(write_ppm(frame))
    level = otsu_level_oracle(frame[:, :, 0])
    (DATA / "bimodal_otsu.golden.ppm").write_bytes(write_ppm(oracle_otsu_output(frame)))
    print(f"wrote fixtures to {DATA} (bimodal oracle level: {level})")


if __name__ == "__main__":
    main()

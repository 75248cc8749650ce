from __future__ import annotations

import numpy as np
import pytest

from posterview.core import Roi, rms_contrast, to_gray
from posterview.glare import (
    GlareSpec,
    apply_glare,
    distinct_colors,
    edge_survival,
    evaluate_methods,
)
from posterview.methods import METHOD_NAMES, EnhanceParams, Method, enhance

from conftest import random_frame


def gray_frame(values) -> np.ndarray:
    v = np.asarray(values, dtype=np.uint8)
    if v.ndim == 1:
        v = v.reshape(1, -1)
    return np.repeat(v[:, :, None], 3, axis=2)


def step_frame(width: int = 16, height: int = 8) -> np.ndarray:
    """Vertical black/white step edge."""
    frame = np.zeros((height, width, 3), dtype=np.uint8)
    frame[:, width // 2 :] = 255
    return frame


class TestGlareSpec:
    def test_rejects_bad_strength(self):
        with pytest.raises(ValueError):
            GlareSpec(strength=-0.1)
        with pytest.raises(ValueError):
            GlareSpec(strength=1.5)

    def test_radial_requires_geometry(self):
        with pytest.raises(ValueError):
            GlareSpec(strength=0.5, mask="radial")
        with pytest.raises(ValueError):
            GlareSpec(strength=0.5, mask="radial", cx=1, cy=1, sigma=0)

    def test_rejects_unknown_mask(self):
        with pytest.raises(ValueError):
            GlareSpec(strength=0.5, mask="vignette")

    def test_radial_mask_peaks_at_center(self):
        spec = GlareSpec(strength=1.0, mask="radial", cx=4, cy=2, sigma=3)
        mask = spec.mask_values(9, 5)
        assert mask[2, 4] == pytest.approx(1.0)
        assert mask[2, 8] < mask[2, 5] < mask[2, 4]
        assert np.all((mask >= 0) & (mask <= 1))


class TestApplyGlare:
    def test_zero_strength_is_identity(self, rng):
        frame = random_frame(rng)
        assert np.array_equal(apply_glare(frame, GlareSpec(strength=0.0)), frame)

    def test_full_uniform_is_white(self, rng):
        frame = random_frame(rng)
        out = apply_glare(frame, GlareSpec(strength=1.0))
        assert np.all(out == 255)

    def test_half_on_black_is_128(self):
        frame = np.zeros((2, 2, 3), dtype=np.uint8)
        out = apply_glare(frame, GlareSpec(strength=0.5))
        assert np.all(out == 128)  # 127.5 rounds away from zero

    def test_monotone_in_strength(self, rng):
        frame = random_frame(rng)
        prev = apply_glare(frame, GlareSpec(strength=0.0))
        for s in np.linspace(0.1, 1.0, 10):
            cur = apply_glare(frame, GlareSpec(strength=float(s)))
            assert np.all(cur.astype(int) >= prev.astype(int))
            prev = cur

    def test_radial_spot_brightens_center_only(self):
        frame = np.zeros((17, 17, 3), dtype=np.uint8)
        spec = GlareSpec(strength=1.0, mask="radial", cx=8, cy=8, sigma=2)
        out = apply_glare(frame, spec)
        assert np.all(out[8, 8] == 255)
        assert np.all(out[0, 0] == 0)  # 8 sigma out, exp term rounds to zero

    def test_uniform_affine_on_luma(self, rng):
        # no clamping concerns: glare is a convex blend toward white
        frame = random_frame(rng, max_side=12, min_side=4)
        roi = Roi(0, 0, frame.shape[1], frame.shape[0])
        base = rms_contrast(to_gray(frame), roi)
        for g in (0.2, 0.5, 0.8):
            post = rms_contrast(to_gray(apply_glare(frame, GlareSpec(strength=g))), roi)
            assert post == pytest.approx((1 - g) * base, abs=1.0)


class TestEdgeSurvival:
    def test_identity_survives_fully(self):
        frame = step_frame()
        assert edge_survival(frame, frame) == 1.0

    def test_flattened_frame_kills_edges(self):
        frame = step_frame()
        flat = np.full_like(frame, 128)
        assert edge_survival(frame, flat) == 0.0

    def test_no_edges_in_reference_returns_one(self):
        flat = np.full((6, 6, 3), 77, dtype=np.uint8)
        assert edge_survival(flat, np.zeros_like(flat)) == 1.0

    def test_step_survives_half_glare(self):
        # degraded step is 128 vs 255: Sobel response 4*127 = 508 >= 32
        frame = step_frame()
        degraded = apply_glare(frame, GlareSpec(strength=0.5))
        assert edge_survival(frame, degraded) == 1.0

    def test_dimension_mismatch_raises(self):
        with pytest.raises(ValueError):
            edge_survival(step_frame(16, 8), step_frame(8, 8))

    def test_tau_must_be_positive(self):
        frame = step_frame()
        with pytest.raises(ValueError):
            edge_survival(frame, frame, tau=0)

    def test_high_tau_ignores_soft_edges(self):
        frame = gray_frame(np.array([[100, 110] * 4] * 4))
        # gradient magnitude 40 for the 10-step edge
        assert edge_survival(frame, frame, tau=41) == 1.0


class TestDistinctColors:
    def test_counts_unique_rgb(self):
        frame = np.array(
            [[[1, 2, 3], [1, 2, 3]], [[4, 5, 6], [0, 0, 0]]], dtype=np.uint8
        )
        assert distinct_colors(frame) == 3

    def test_roi_restriction(self):
        frame = np.zeros((2, 4, 3), dtype=np.uint8)
        frame[:, 2:] = 255
        assert distinct_colors(frame) == 2
        assert distinct_colors(frame, Roi(0, 0, 2, 2)) == 1

    def test_channel_order_matters(self):
        frame = np.array([[[1, 0, 0], [0, 1, 0], [0, 0, 1]]], dtype=np.uint8)
        assert distinct_colors(frame) == 3


class TestEvaluateMethods:
    def test_zero_glare_matches_direct_contrast(self, rng):
        frame = random_frame(rng, max_side=12, min_side=6)
        roi = Roi(1, 1, 4, 4)
        report = evaluate_methods(frame, roi, GlareSpec(strength=0.0))
        for entry, method in zip(report.methods, Method):
            enhanced = enhance(frame, method)
            assert entry.rms == rms_contrast(to_gray(enhanced), roi)
            assert entry.edge_survival == 1.0
            assert entry.colors >= 1

    def test_methods_in_wire_order(self, rng):
        frame = random_frame(rng, min_side=4)
        roi = Roi(0, 0, frame.shape[1], frame.shape[0])
        report = evaluate_methods(frame, roi, GlareSpec(strength=0.3))
        assert [m.method for m in report.methods] == list(METHOD_NAMES)

    def test_gray_thresh_beats_passthrough_on_low_contrast(self):
        # luma values 100 and 160 straddle the midpoint with low spread
        frame = gray_frame([100] * 8 + [160] * 8)
        roi = Roi(0, 0, 16, 1)
        report = evaluate_methods(frame, roi, GlareSpec(strength=0.4))
        by_name = {m.method: m for m in report.methods}
        assert by_name["gray-thresh"].rms > by_name["passthrough"].rms

    def test_json_wire_shape(self, rng):
        frame = random_frame(rng, min_side=4)
        roi = Roi(0, 0, 2, 2)
        spec = GlareSpec(strength=0.25, mask="radial", cx=1.0, cy=1.0, sigma=2.0)
        doc = evaluate_methods(frame, roi, spec).to_json_dict()
        assert doc["roi"] == [0, 0, 2, 2]
        assert doc["glare"] == {"strength": 0.25, "mask": "radial", "cx": 1.0, "cy": 1.0, "sigma": 2.0}
        assert len(doc["methods"]) == 7
        assert set(doc["methods"][0]) == {"method", "rms", "edge_survival", "colors"}

    def test_uniform_glare_json_omits_geometry(self):
        assert GlareSpec(strength=0.5).to_json_dict() == {"strength": 0.5, "mask": "uniform"}

    def test_ratios_in_range(self, rng):
        frame = random_frame(rng, min_side=4)
        roi = Roi(0, 0, frame.shape[1], frame.shape[0])
        report = evaluate_methods(frame, roi, GlareSpec(strength=0.6))
        for m in report.methods:
            assert 0.0 <= m.edge_survival <= 1.0
            assert m.colors >= 1
            assert m.rms >= 0.0

"""Per-method latency benchmark at viewfinder resolutions.

The input frame is pseudo-random noise from a fixed 64-bit linear
congruential generator, so runs are asset-free and every machine times the
exact same pixels.  The tail (p95) gates the optional real-time budget,
since dropped-frame smoothness is a tail property, not a mean property.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .methods import EnhanceParams, Method, enhance, method_name

LCG_SEED = 0x5EED
LCG_MULT = 6364136223846793005
LCG_INC = 1442695040888963407


def lcg_frame(width: int, height: int, seed: int = LCG_SEED) -> np.ndarray:
    """Deterministic noise frame from a 64-bit LCG.

    One generator step per channel byte in row-major R,G,B order: starting
    from the seed, state <- (state * LCG_MULT + LCG_INC) mod 2^64, emitting
    the top 8 bits of each new state.
    """
    if width < 1 or height < 1:
        raise ValueError(f"frame must be at least 1x1, got {width}x{height}")
    n = 3 * width * height
    mask = (1 << 64) - 1
    # states[i] = state after i+1 steps; the array is grown by composing the
    # step map with itself (state_{i+k} = A_k*state_i + C_k mod 2^64), the
    # scalars kept exact in python ints and the array math in wrapping uint64.
    states = np.array([(LCG_MULT * seed + LCG_INC) & mask], dtype=np.uint64)
    step_a, step_c = LCG_MULT, LCG_INC
    while states.size < n:
        states = np.concatenate([states, states * np.uint64(step_a) + np.uint64(step_c)])
        step_c = (step_a * step_c + step_c) & mask
        step_a = (step_a * step_a) & mask
    channels = (states[:n] >> np.uint64(56)).astype(np.uint8)
    return channels.reshape(height, width, 3)


@dataclass(frozen=True)
class MethodTiming:
    """Latency summary for one method over the timed iterations."""

    method: str
    mean_us: float
    p50_us: float
    p95_us: float
    mpix_per_s: float
    verdict: str | None  # "pass"/"fail" against the budget, None if unbudgeted


@dataclass(frozen=True)
class BenchReport:
    width: int
    height: int
    iterations: int
    warmup: int
    stats_subsample: int
    budget_ms: float | None
    results: list[MethodTiming]

    def any_failed(self) -> bool:
        return any(r.verdict == "fail" for r in self.results)

    def to_json_dict(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "iterations": self.iterations,
            "warmup": self.warmup,
            "stats_subsample": self.stats_subsample,
            "budget_ms": self.budget_ms,
            "results": [
                {
                    "method": r.method,
                    "mean_us": r.mean_us,
                    "p50_us": r.p50_us,
                    "p95_us": r.p95_us,
                    "mpix_per_s": r.mpix_per_s,
                    "verdict": r.verdict,
                }
                for r in self.results
            ],
        }


def _nearest_rank(sorted_us: list[float], q: float) -> float:
    idx = math.ceil(q / 100.0 * len(sorted_us)) - 1
    return sorted_us[max(idx, 0)]


def run_bench(
    width: int = 480,
    height: int = 800,
    iterations: int = 100,
    warmup: int = 10,
    params: EnhanceParams = EnhanceParams(),
    budget_ms: float | None = None,
) -> BenchReport:
    """Time every method on the seeded noise frame, single-threaded.

    Each method runs ``warmup`` untimed then ``iterations`` timed passes on a
    monotonic clock.  Verdict per method is pass iff p95 <= budget.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    if warmup < 0:
        raise ValueError(f"warmup must be >= 0, got {warmup}")
    frame = lcg_frame(width, height)
    results = []
    for method in Method:
        for _ in range(warmup):
            enhance(frame, method, params)
        samples_us = []
        for _ in range(iterations):
            t0 = time.perf_counter_ns()
            enhance(frame, method, params)
            t1 = time.perf_counter_ns()
            samples_us.append((t1 - t0) / 1000.0)
        samples_us.sort()
        total_s = sum(samples_us) / 1e6
        verdict = None
        p95 = _nearest_rank(samples_us, 95.0)
        if budget_ms is not None:
            verdict = "pass" if p95 <= 1000.0 * budget_ms else "fail"
        results.append(
            MethodTiming(
                method=method_name(method),
                mean_us=sum(samples_us) / iterations,
                p50_us=_nearest_rank(samples_us, 50.0),
                p95_us=p95,
                mpix_per_s=width * height * iterations / total_s / 1e6,
                verdict=verdict,
            )
        )
    return BenchReport(
        width=width,
        height=height,
        iterations=iterations,
        warmup=warmup,
        stats_subsample=params.stats_subsample,
        budget_ms=budget_ms,
        results=results,
    )

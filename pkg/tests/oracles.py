"""Independent reference implementations the tests check the library against.

These deliberately take the slow, literal route (exact rational arithmetic,
per-threshold recounts, library eigensolver) so they share no code with the
production paths they verify.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def otsu_level_oracle(gray: np.ndarray) -> int:
    """Exhaustive exact-rational maximization of the between-class variance.

    Recounts both classes from the raw pixels for every candidate threshold;
    ties and the all-one-class degenerate case resolve to the smallest t,
    except a constant input which reports its own value.
    """
    values = gray.astype(np.int64).ravel()
    if np.all(values == values[0]):
        return int(values[0])
    n = values.size
    best_t = 0
    best = Fraction(-1)
    for t in range(255):
        low = values[values <= t]
        n0 = low.size
        n1 = n - n0
        if n0 == 0 or n1 == 0:
            continue
        s0 = int(low.sum())
        s1 = int(values.sum()) - s0
        w0 = Fraction(n0, n)
        w1 = Fraction(n1, n)
        mu0 = Fraction(s0, n0)
        mu1 = Fraction(s1, n1)
        sigma_b = w0 * w1 * (mu0 - mu1) ** 2
        if sigma_b > best:
            best = sigma_b
            best_t = t
    return best_t


def covariance_oracle(pixels: np.ndarray) -> np.ndarray:
    """Sample covariance of (n, 3) pixels via numpy."""
    if pixels.shape[0] < 2:
        return np.zeros((3, 3))
    return np.cov(pixels.astype(np.float64), rowvar=False, ddof=1)


def eigh_oracle(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Library eigendecomposition, sorted descending, eigenvectors as rows."""
    vals, vecs = np.linalg.eigh(matrix)
    order = np.argsort(-vals, kind="stable")
    return vals[order], vecs.T[order]


def sign_normalize_rows(rows: np.ndarray) -> np.ndarray:
    out = rows.copy()
    for i in range(out.shape[0]):
        lead = np.argmax(np.abs(out[i]))
        if out[i, lead] < 0:
            out[i] = -out[i]
    return out

"""The preview enhancement methods: one contrast stretch plus five posterizers.

Every method is a pure ``frame -> frame`` transform preserving dimensions.
The five posterizers map each pixel onto a handful of maximally separated
colors (corners of the RGB cube) so the scene layout stays readable on a
washed-out display:

* ``GRAY_THRESH``  - luma split at a fixed midpoint, black/white.
* ``OTSU``         - luma split at the histogram's optimal two-class
  threshold, black/white.
* ``RGB_THRESH``   - each channel split at the midpoint independently, up to
  8 colors.
* ``RGB_MAX``      - brightest channel wins, red/green/blue.
* ``DECORR_THRESH`` - channels decorrelated by PCA, then each principal
  component sign-split, up to 8 colors.

``HIST_EQ`` is the photo-realistic baseline (global luma equalization), and
``PASSTHROUGH`` copies the frame.

Global statistics (histograms, channel covariance) are accumulated with exact
integer arithmetic, which makes every method bit-deterministic and invariant
under pixel permutation when ``stats_subsample == 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .core import ensure_frame, ensure_gray, to_gray


class Method(IntEnum):
    """Enhancement selector; the integer values are the wire ids."""

    PASSTHROUGH = 0
    HIST_EQ = 1
    GRAY_THRESH = 2
    OTSU = 3
    RGB_THRESH = 4
    RGB_MAX = 5
    DECORR_THRESH = 6


#: Wire/CLI names, indexable by Method value.
METHOD_NAMES: tuple[str, ...] = (
    "passthrough",
    "histeq",
    "gray-thresh",
    "otsu",
    "rgb-thresh",
    "rgb-max",
    "decorr-thresh",
)

_NAME_TO_METHOD = {name: Method(i) for i, name in enumerate(METHOD_NAMES)}


def method_name(method: Method) -> str:
    return METHOD_NAMES[int(method)]


def method_from_name(name: str) -> Method:
    try:
        return _NAME_TO_METHOD[name]
    except KeyError:
        raise ValueError(f"unknown method {name!r}; expected one of {', '.join(METHOD_NAMES)}")


@dataclass(frozen=True)
class EnhanceParams:
    """Tunables shared by the enhancement methods.

    midpoint: threshold level for the fixed-split methods (luma or channel
        value mapping high at ``value >= midpoint``).
    stats_subsample: stride, in both axes, at which global statistics
        (histograms, covariance) are sampled; 1 means exact.  The per-pixel
        mapping always covers every pixel.
    var_epsilon: smallest principal-component variance treated as signal;
        components at or below it never set their output bit.
    """

    midpoint: int = 128
    stats_subsample: int = 1
    var_epsilon: float = 1e-9

    def __post_init__(self) -> None:
        if not 1 <= self.midpoint <= 255:
            raise ValueError(f"midpoint must be in [1, 255], got {self.midpoint}")
        if self.stats_subsample < 1:
            raise ValueError(f"stats_subsample must be >= 1, got {self.stats_subsample}")
        if not self.var_epsilon > 0:
            raise ValueError(f"var_epsilon must be > 0, got {self.var_epsilon}")


def _black_white(white: np.ndarray) -> np.ndarray:
    """Expand a boolean mask into a black/white RGB frame."""
    w8 = white.astype(np.uint8) * 255
    return np.repeat(w8[:, :, None], 3, axis=2)


def gray_threshold(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    """Black/white split of luma at the midpoint (high at luma >= midpoint)."""
    luma = to_gray(frame)
    return _black_white(luma >= params.midpoint)


def otsu_level(gray: np.ndarray) -> int:
    """Optimal two-class threshold of a luma histogram.

    Scans t in [0, 254] splitting values into [0..t] and [t+1..255] and
    returns the smallest t maximizing the between-class variance
    w0*w1*(mu0 - mu1)^2.  The comparison is done on the exact integer
    cross-multiplied form, so plateau ties resolve identically on every
    platform.  A single-valued input returns that value (both classes empty
    on one side for every t, so no split is meaningful).
    """
    ensure_gray(gray)
    hist = np.bincount(gray.ravel(), minlength=256)
    nonzero = np.flatnonzero(hist)
    if nonzero.size == 1:
        return int(nonzero[0])
    counts = [int(v) for v in hist]
    total = sum(counts)
    total_sum = sum(i * c for i, c in enumerate(counts))

    best_t = 0
    # sigma_b^2(t) is proportional to (s0*n1 - s1*n0)^2 / (n0*n1); track the
    # best as an exact integer fraction num/den.
    best_num, best_den = -1, 1
    n0 = 0
    s0 = 0
    for t in range(255):
        n0 += counts[t]
        s0 += t * counts[t]
        n1 = total - n0
        if n0 == 0 or n1 == 0:
            continue
        s1 = total_sum - s0
        num = (s0 * n1 - s1 * n0) ** 2
        den = n0 * n1
        if num * best_den > best_num * den:
            best_num, best_den = num, den
            best_t = t
    return best_t


def otsu_threshold(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    """Black/white split of luma at the Otsu-optimal threshold."""
    luma = to_gray(frame)
    s = params.stats_subsample
    level = otsu_level(luma[::s, ::s])
    return _black_white(luma > level)


def _hist_eq_map(hist: np.ndarray) -> np.ndarray:
    """256-entry luma remap table from a luma histogram.

    m(v) = round(255 * (cdf(v) - cdf_min) / (n - cdf_min)) with cdf_min the
    smallest nonzero cdf value; constant input (n == cdf_min) maps to
    identity.  Integer arithmetic throughout.
    """
    cdf = np.cumsum(hist.astype(np.int64))
    n = int(cdf[-1])
    cdf_min = int(cdf[np.flatnonzero(hist)[0]])
    if n == cdf_min:
        return np.arange(256, dtype=np.uint8)
    d = n - cdf_min
    lut = (2 * 255 * (cdf - cdf_min) + d) // (2 * d)
    return np.clip(lut, 0, 255).astype(np.uint8)


def hist_equalize(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    """Global histogram equalization of luma with hue-preserving RGB scaling.

    Each pixel's channels are scaled by m(Y)/Y so only brightness moves;
    Y == 0 pixels (no chroma to preserve) are set to the gray m(0).
    """
    ensure_frame(frame)
    luma = to_gray(frame)
    s = params.stats_subsample
    hist = np.bincount(luma[::s, ::s].ravel(), minlength=256)
    lut = _hist_eq_map(hist)

    y = luma.astype(np.int64)
    m = lut[luma].astype(np.int64)
    y_safe = np.where(y == 0, 1, y)
    scaled = (2 * frame.astype(np.int64) * m[:, :, None] + y[:, :, None]) // (2 * y_safe[:, :, None])
    out = np.clip(scaled, 0, 255)
    out = np.where((y == 0)[:, :, None], m[:, :, None], out)
    return out.astype(np.uint8)


def rgb_threshold(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    """Independent per-channel split at the midpoint; palette is the 8 cube corners."""
    ensure_frame(frame)
    return np.where(frame >= params.midpoint, 255, 0).astype(np.uint8)


def rgb_max(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    """Brightest channel to 255, the others to 0; ties go R, then G, then B."""
    ensure_frame(frame)
    winner = np.argmax(frame, axis=2)  # argmax takes the first max: R-first tie-break
    out = np.zeros_like(frame)
    rows, cols = np.indices(winner.shape)
    out[rows, cols, winner] = 255
    return out


@dataclass(frozen=True)
class PcaBasis:
    """Channel-space principal axes of a frame.

    mean: per-channel means, shape (3,).
    eigenvalues: channel covariance eigenvalues, descending, >= 0.
    eigenvectors: matching unit eigenvectors as rows, each sign-normalized so
        its largest-magnitude component (first on ties) is positive.
    """

    mean: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _channel_stats(pixels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Exact mean vector and sample covariance of (n, 3) uint8 pixels.

    Sums and cross products are integers, and the final divisions are single
    correctly-rounded float operations, so the result does not depend on
    pixel order.  A single sample yields zero covariance.
    """
    x = pixels.astype(np.int64)
    n = x.shape[0]
    s = x.sum(axis=0)
    gram = x.T @ x  # max entry 255^2 * n, far below int64 range
    mean = np.array([int(si) / n for si in s], dtype=np.float64)
    cov = np.zeros((3, 3), dtype=np.float64)
    if n > 1:
        for i in range(3):
            for j in range(3):
                cov[i, j] = (n * int(gram[i, j]) - int(s[i]) * int(s[j])) / (n * (n - 1))
    return mean, cov


def _jacobi_eigh(matrix: np.ndarray, rel_tol: float = 1e-10, max_sweeps: int = 30) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric 3x3 matrix by cyclic Jacobi rotations.

    Sweeps the off-diagonal entries until their combined magnitude drops to
    rel_tol * trace (the matrix is PSD here, so the trace bounds its scale),
    or max_sweeps is hit.  Returns (eigenvalues, eigenvectors-as-columns),
    unsorted.
    """
    a = matrix.astype(np.float64).copy()
    v = np.eye(3)
    threshold = rel_tol * abs(float(np.trace(a)))
    for _ in range(max_sweeps):
        off = abs(a[0, 1]) + abs(a[0, 2]) + abs(a[1, 2])
        if off <= threshold:
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            apq = a[p, q]
            if apq == 0.0:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
            c = 1.0 / math.sqrt(t * t + 1.0)
            s = t * c
            rot = np.eye(3)
            rot[p, p] = rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            a[p, q] = a[q, p] = 0.0
            v = v @ rot
    return np.diag(a).copy(), v


def compute_pca_basis(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> PcaBasis:
    """Principal-component basis of the frame's RGB distribution.

    Statistics come from pixels sampled every ``stats_subsample`` rows and
    columns.  Eigenpairs are sorted by descending eigenvalue (stable on
    ties); tiny negative eigenvalues from rotation round-off clamp to 0.
    """
    ensure_frame(frame)
    s = params.stats_subsample
    pixels = frame[::s, ::s].reshape(-1, 3)
    mean, cov = _channel_stats(pixels)
    eigenvalues, vectors = _jacobi_eigh(cov)
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = np.maximum(eigenvalues[order], 0.0)
    rows = vectors.T[order].copy()
    for i in range(3):
        lead = np.argmax(np.abs(rows[i]))
        if rows[i, lead] < 0:
            rows[i] = -rows[i]
    return PcaBasis(mean=mean, eigenvalues=eigenvalues, eigenvectors=rows)


def decorr_threshold(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    """Sign-split each pixel along the frame's principal color axes.

    Pixel bits b_i = 1 iff the centered pixel projects non-negatively onto
    principal axis i AND that axis carries variance above var_epsilon; the
    output color is (b1, b2, b3) * 255 with the dominant axis on red.  Axes
    with no variance contribute 0, so a constant frame comes out black and a
    grayscale frame uses only black and red.  Because classification only
    looks at projection signs, rescaling the principal axes would not change
    the output.
    """
    basis = compute_pca_basis(frame, params)
    live = basis.eigenvalues > params.var_epsilon
    centered = frame.reshape(-1, 3).astype(np.float64) - basis.mean
    proj = centered @ basis.eigenvectors.T
    bits = (proj >= 0.0) & live
    return (bits.astype(np.uint8) * 255).reshape(frame.shape)


def passthrough(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    ensure_frame(frame)
    return frame.copy()


_DISPATCH = {
    Method.PASSTHROUGH: passthrough,
    Method.HIST_EQ: hist_equalize,
    Method.GRAY_THRESH: gray_threshold,
    Method.OTSU: otsu_threshold,
    Method.RGB_THRESH: rgb_threshold,
    Method.RGB_MAX: rgb_max,
    Method.DECORR_THRESH: decorr_threshold,
}


def enhance(frame: np.ndarray, method: Method, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    """Apply one enhancement method; output dimensions equal input dimensions."""
    ensure_frame(frame)
    return _DISPATCH[Method(method)](frame, params)


#: Grid tile order: top row then bottom row of the 2x3 comparison montage.
GRID_METHODS: tuple[Method, ...] = (
    Method.HIST_EQ,
    Method.GRAY_THRESH,
    Method.OTSU,
    Method.RGB_THRESH,
    Method.RGB_MAX,
    Method.DECORR_THRESH,
)

_GRID_SEP = 2


def comparison_grid(frame: np.ndarray, params: EnhanceParams = EnhanceParams()) -> np.ndarray:
    """2x3 montage of the six methods with 2-pixel black separators.

    Output is (3w + 4) x (2h + 2) pixels; tiles are laid out histeq,
    gray-thresh, otsu on top and rgb-thresh, rgb-max, decorr-thresh below.
    """
    ensure_frame(frame)
    h, w = frame.shape[:2]
    canvas = np.zeros((2 * h + _GRID_SEP, 3 * w + 2 * _GRID_SEP, 3), dtype=np.uint8)
    for idx, method in enumerate(GRID_METHODS):
        row, col = divmod(idx, 3)
        y0 = row * (h + _GRID_SEP)
        x0 = col * (w + _GRID_SEP)
        canvas[y0 : y0 + h, x0 : x0 + w] = enhance(frame, method, params)
    return canvas

"""posterview: high-contrast posterized previews for sunlit camera displays."""

from .bench import BenchReport, MethodTiming, lcg_frame, run_bench
from .core import Roi, ensure_frame, ensure_gray, rms_contrast, to_gray
from .glare import (
    GlareSpec,
    MethodVisibility,
    VisibilityReport,
    apply_glare,
    distinct_colors,
    edge_survival,
    evaluate_methods,
)
from .methods import (
    METHOD_NAMES,
    EnhanceParams,
    Method,
    PcaBasis,
    comparison_grid,
    compute_pca_basis,
    decorr_threshold,
    enhance,
    gray_threshold,
    hist_equalize,
    method_from_name,
    method_name,
    otsu_level,
    otsu_threshold,
    rgb_max,
    rgb_threshold,
)
from .ppm import (
    PpmError,
    PpmHeaderError,
    PpmMagicError,
    PpmMaxvalError,
    PpmPayloadError,
    read_ppm,
    write_ppm,
)

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "EnhanceParams",
    "GlareSpec",
    "Method",
    "METHOD_NAMES",
    "MethodTiming",
    "MethodVisibility",
    "PcaBasis",
    "PpmError",
    "PpmHeaderError",
    "PpmMagicError",
    "PpmMaxvalError",
    "PpmPayloadError",
    "Roi",
    "VisibilityReport",
    "apply_glare",
    "comparison_grid",
    "compute_pca_basis",
    "decorr_threshold",
    "distinct_colors",
    "edge_survival",
    "enhance",
    "ensure_frame",
    "ensure_gray",
    "evaluate_methods",
    "gray_threshold",
    "hist_equalize",
    "lcg_frame",
    "method_from_name",
    "method_name",
    "otsu_level",
    "otsu_threshold",
    "read_ppm",
    "rgb_max",
    "rgb_threshold",
    "rms_contrast",
    "run_bench",
    "to_gray",
    "write_ppm",
]

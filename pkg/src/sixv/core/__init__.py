from .params import (ModelParams, validate_params, require_valid,
                     delta_parameter, admissibility_ratio)
from .signatures import Signature, EMPTY, interlaces_below
from .paths import ArrowConfig, PathCollection, height_function
from .holes import HoleArray, extract_holes, INF
from .gt import gt_count, gt_count_brute, gt_volume, ascending

__all__ = [
    "ModelParams", "validate_params", "require_valid", "delta_parameter",
    "admissibility_ratio", "Signature", "EMPTY", "interlaces_below",
    "ArrowConfig", "PathCollection", "height_function", "HoleArray",
    "extract_holes", "INF", "gt_count", "gt_count_brute", "gt_volume",
    "ascending",
]

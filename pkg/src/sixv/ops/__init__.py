from .operators import (fk_S, fk_eval, fsub, eigen_F, apply_D,
                        apply_D_chain)
from .contour import (ProductFunction, ContourSpec, default_contour,
                      contour_D, contour_D_chain)
from .recurrence import weight_observable, recurrence_check

__all__ = [
    "fk_S", "fk_eval", "fsub", "eigen_F", "apply_D", "apply_D_chain",
    "ProductFunction", "ContourSpec", "default_contour", "contour_D",
    "contour_D_chain", "weight_observable", "recurrence_check",
]

from .constants import LimitConstants, limit_constants, steepest_G
from .cdf import cdf_contour
from .gue import psi, psi_quadrature, gue_edge_cdf, gue_mc_oracle

__all__ = ["LimitConstants", "limit_constants", "steepest_G", "cdf_contour",
           "psi", "psi_quadrature", "gue_edge_cdf", "gue_mc_oracle"]

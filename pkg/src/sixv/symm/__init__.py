from .weights import (q_pochhammer, q_pochhammer_inv, vertex_weight,
                      conj_vertex_weight)
from .functions import (F_sym, G_sym, skew_F_row, skew_G_row, F_geom, G_geom,
                        g_principal, skew_F_multi, skew_G_multi,
                        CoincidentVariablesError)
from .brute import brute_force_F, brute_force_G
from .series import (TruncationPolicy, boundary_f, partition_Z, measure_prob,
                     cauchy_lhs, cauchy_rhs, skew_cauchy_check)

__all__ = [
    "q_pochhammer", "q_pochhammer_inv", "vertex_weight", "conj_vertex_weight",
    "F_sym", "G_sym", "skew_F_row", "skew_G_row", "F_geom", "G_geom",
    "g_principal", "skew_F_multi", "skew_G_multi", "CoincidentVariablesError",
    "brute_force_F", "brute_force_G", "TruncationPolicy", "boundary_f",
    "partition_Z", "measure_prob", "cauchy_lhs", "cauchy_rhs",
    "skew_cauchy_check",
]

from .rng import RngStream
from .steps import step_probs
from .chain import zero_sampler, chain_sampler, row_sampler, sample_record
from .oracle import exact_row_oracle
from .recursive import IntervalBounds, interval_weight, row_sampler_midpoint
from .arrow import base_weight, arrow_case_weights, arrow_sampler

__all__ = [
    "RngStream", "step_probs", "zero_sampler", "chain_sampler", "row_sampler",
    "sample_record", "exact_row_oracle", "IntervalBounds", "interval_weight",
    "row_sampler_midpoint", "base_weight", "arrow_case_weights",
    "arrow_sampler",
]

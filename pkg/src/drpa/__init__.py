"""Degree-recency-biased preferential attachment: simulation and analysis."""

from .growth import (
    AttachmentWeights,
    GrowthNetwork,
    KernelConfig,
    WarmupPolicy,
    attachment_weights,
    degree_at,
    grow,
    recency_factor,
)
from .metrics import (
    DegreeStats,
    RunResult,
    degree_stats,
    max_arrival_in_top_fraction,
    rank_arrival_difference,
    rank_by_degree,
    rci,
    record_trajectory,
    top_k_arrivals,
)

__version__ = "0.1.0"

__all__ = [
    "AttachmentWeights",
    "DegreeStats",
    "GrowthNetwork",
    "KernelConfig",
    "RunResult",
    "WarmupPolicy",
    "attachment_weights",
    "degree_at",
    "degree_stats",
    "grow",
    "max_arrival_in_top_fraction",
    "rank_arrival_difference",
    "rank_by_degree",
    "rci",
    "recency_factor",
    "record_trajectory",
    "top_k_arrivals",
    "__version__",
]

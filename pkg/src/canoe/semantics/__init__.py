"""Phase-2 mathematics: intrinsic strength, degree solving, aggregation."""

from .aggregate import aggregate_option, score_all_options, smax
from .config import AggregationConfig, ScorerWeights, SolverConfig
from .scoring import case_text, score_intrinsic
from .solver import influence, solve

__all__ = [
    "AggregationConfig",
    "ScorerWeights",
    "SolverConfig",
    "aggregate_option",
    "case_text",
    "influence",
    "score_all_options",
    "score_intrinsic",
    "smax",
    "solve",
]

"""Option-level aggregation: a neutral-centered soft-max difference.

F(o) = clip(0.5 + 0.5·(smax_T(supporter degrees) − smax_T(challenger
degrees))). smax interpolates between mean (large T) and max (small T);
an empty side contributes 0, so an undebated option scores 0.5.
"""

from __future__ import annotations

import math

from ..argcore import ArgumentGraph, DegreeAssignment, Stance
from ..canonical import round9
from .config import AggregationConfig, SolverConfig
from .solver import solve


def smax(values: list[float], temperature: float) -> float:
    if not values:
        return 0.0
    # shift by the max so exp() cannot overflow at small temperatures
    m = max(values)
    num = 0.0
    den = 0.0
    for v in values:
        w = math.exp((v - m) / temperature)
        num += v * w
        den += w
    return num / den


def aggregate_option(
    option_id: str,
    graph: ArgumentGraph,
    degrees: dict[str, float],
    agg: AggregationConfig = AggregationConfig(),
) -> float:
    graph.get_option(option_id)
    supporters = [
        degrees[a.arg_id] for a in graph.arguments_for_option(option_id, Stance.SUPPORT)
    ]
    challengers = [
        degrees[a.arg_id] for a in graph.arguments_for_option(option_id, Stance.CHALLENGE)
    ]
    raw = agg.neutral + agg.span * (
        smax(supporters, agg.temperature) - smax(challengers, agg.temperature)
    )
    return round9(min(1.0, max(0.0, raw)))


def score_all_options(
    graph: ArgumentGraph,
    cfg: SolverConfig = SolverConfig(),
    agg: AggregationConfig = AggregationConfig(),
) -> DegreeAssignment:
    """solve() then aggregate every option; the one-call Phase-2 evaluation."""
    assignment = solve(graph, cfg)
    assignment.option_scores = {
        oid: aggregate_option(oid, graph, assignment.degrees, agg)
        for oid in graph.option_ids()
    }
    return assignment

"""Damped synchronous fixed-point iteration over the argument graph.

Update rule, all nodes at once:

    f_{t+1}(x) = (1 - λ) · f_t(x) + λ · σ(τ(x) + I(x, f_t))

starting from f⁽⁰⁾ = τ, stopping when the ∞-norm residual drops below
tolerance. Damping sits outside σ; λ=1 recovers the undamped update.
"""

from __future__ import annotations

from ..argcore import ArgumentGraph, DegreeAssignment, Polarity
from ..canonical import round9
from ..errors import NonConvergence, UnknownArgument
from .config import SolverConfig


def influence(arg_id: str, graph: ArgumentGraph, degrees: dict[str, float]) -> float:
    """I(x,f): weighted supporter degrees minus weighted attacker degrees.

    Terms are summed in lexicographic source-id order so float rounding
    is identical on every run.
    """
    if arg_id not in graph.arguments:
        raise UnknownArgument(f"no argument {arg_id!r}")
    total = 0.0
    for rel in graph.incoming(arg_id, Polarity.SUPPORT):
        total += rel.weight * degrees[rel.source]
    for rel in graph.incoming(arg_id, Polarity.ATTACK):
        total -= rel.weight * degrees[rel.source]
    return total


def solve(graph: ArgumentGraph, cfg: SolverConfig = SolverConfig()) -> DegreeAssignment:
    ids = graph.argument_ids()
    squash = cfg.squash_fn
    lam = cfg.damping

    # incoming edge lists resolved once; (source, signed weight) per target
    incoming: dict[str, list[tuple[str, float]]] = {aid: [] for aid in ids}
    for aid in ids:
        for rel in graph.incoming(aid, Polarity.SUPPORT):
            incoming[aid].append((rel.source, rel.weight))
        for rel in graph.incoming(aid, Polarity.ATTACK):
            incoming[aid].append((rel.source, -rel.weight))

    current = {aid: graph.arguments[aid].tau for aid in ids}
    residual = 0.0
    iterations = 0
    for iterations in range(1, cfg.max_iterations + 1):
        nxt: dict[str, float] = {}
        residual = 0.0
        for aid in ids:
            inf = 0.0
            for source, signed_weight in incoming[aid]:
                inf += signed_weight * current[source]
            value = (1.0 - lam) * current[aid] + lam * squash(graph.arguments[aid].tau + inf)
            nxt[aid] = value
            delta = abs(value - current[aid])
            if delta > residual:
                residual = delta
        current = nxt
        if residual < cfg.tolerance:
            break

    if residual >= cfg.tolerance:
        partial = DegreeAssignment(
            degrees={aid: round9(v) for aid, v in current.items()},
            iterations_used=iterations,
            residual=round9(residual),
        )
        raise NonConvergence(
            f"residual {residual:g} after {iterations} iterations",
            partial=partial,
            residual=residual,
            iterations=iterations,
        )

    return DegreeAssignment(
        degrees={aid: round9(v) for aid, v in current.items()},
        iterations_used=iterations,
        residual=round9(residual),
    )

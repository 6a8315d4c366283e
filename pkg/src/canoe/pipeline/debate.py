"""Phase-2 debate: every recruited role argues for and against every
option, each round, through a pluggable backend.

Iteration order is fixed (round, then roster order, then option order)
and argument ids are derived from that position, so the scripted
backend yields byte-identical graphs on every run. Backend failures
abort the whole debate; a half-debated graph would silently bias the
option scores.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

from ..argcore import (
    Argument,
    ArgumentGraph,
    ArgumentStatus,
    CareOption,
    EvidenceDoc,
    PatientCase,
    Polarity,
    Relation,
    Stance,
)
from ..errors import DuplicateRelation, MalformedResponse, SelfLoop, ValidationError
from ..semantics import ScorerWeights, score_intrinsic
from .backends import (
    NEW_CHALLENGE_REF,
    NEW_SUPPORT_REF,
    BackendRequest,
    BackendResponse,
    ExternalBackend,
    PriorArgument,
    scripted_backend,
)
from .recruit import TeamRoster
from .retrieval import retrieve_evidence

logger = logging.getLogger(__name__)

HEURISTIC_LINK_WEIGHT = 0.25


@dataclass(frozen=True)
class DebateConfig:
    rounds: int = 1
    backend: str = "scripted"
    retrieval_top_k: int = 8
    heuristic_linker: bool = False

    def __post_init__(self):
        if self.rounds < 1:
            raise ValidationError("rounds must be >= 1")
        if self.retrieval_top_k < 1:
            raise ValidationError("retrieval_top_k must be >= 1")
        if self.backend not in ("scripted", "external"):
            raise ValidationError(f"unknown backend: {self.backend!r}")

    def to_doc(self) -> dict:
        return {
            "rounds": self.rounds,
            "backend": self.backend,
            "retrieval_top_k": self.retrieval_top_k,
            "heuristic_linker": self.heuristic_linker,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "DebateConfig":
        return cls(
            rounds=int(doc.get("rounds", 1)),
            backend=str(doc.get("backend", "scripted")),
            retrieval_top_k=int(doc.get("retrieval_top_k", 8)),
            heuristic_linker=bool(doc.get("heuristic_linker", False)),
        )


def build_query(case: PatientCase, option: CareOption) -> str:
    parts = [option.title, option.description]
    parts.extend(case.conditions)
    parts.extend(sorted(case.flags))
    return " ".join(p for p in parts if p)


def resolve_backend(cfg: DebateConfig):
    if cfg.backend == "scripted":
        return scripted_backend
    return ExternalBackend.from_env()


def _arg_id(role, option_id: str, stance: str, round_no: int) -> str:
    return f"{role.value}-{option_id}-{stance}-{round_no}"


def _insert_argument(
    graph: ArgumentGraph,
    arg_id: str,
    proposed,
    stance: Stance,
    role,
    option_id: str,
    case: PatientCase,
    evidence: list[EvidenceDoc],
    weights: ScorerWeights,
) -> ArgumentGraph:
    arg = Argument(
        arg_id=arg_id,
        content=proposed.content,
        stance=stance,
        role=role,
        target_option=option_id,
        cited_evidence=proposed.cited_evidence,
        status=ArgumentStatus.PENDING,
    )
    tau = score_intrinsic(arg, case, evidence, weights)
    return graph.with_argument(replace(arg, tau=tau))


def _apply_relations(
    graph: ArgumentGraph,
    response: BackendResponse,
    support_id: str,
    challenge_id: str,
) -> ArgumentGraph:
    refs = {NEW_SUPPORT_REF: support_id, NEW_CHALLENGE_REF: challenge_id}
    for proposed in response.relations:
        source = refs.get(proposed.source_ref, proposed.source_ref)
        target = refs.get(proposed.target_ref, proposed.target_ref)
        if source not in graph.arguments or target not in graph.arguments:
            logger.warning(
                "dropping relation with unresolvable ref: %s -> %s",
                proposed.source_ref,
                proposed.target_ref,
            )
            continue
        try:
            rel = Relation(
                source=source,
                target=target,
                polarity=Polarity(proposed.polarity),
                weight=proposed.weight,
            )
            graph = graph.with_relation(rel)
        except (SelfLoop, DuplicateRelation) as exc:
            raise MalformedResponse(f"backend proposed an invalid relation: {exc}") from exc
    return graph


def _link_co_citations(graph: ArgumentGraph) -> ArgumentGraph:
    """Heuristic linker: same-option co-citation becomes a weak support edge."""
    existing = {r.triple for r in graph.relations}
    for option_id in graph.option_ids():
        args = graph.arguments_for_option(option_id)
        for i, a in enumerate(args):
            if not a.cited_evidence:
                continue
            cited_a = set(a.cited_evidence)
            for b in args[i + 1 :]:
                if not cited_a & set(b.cited_evidence):
                    continue
                triple = (a.arg_id, b.arg_id, Polarity.SUPPORT.value)
                if triple in existing:
                    continue
                graph = graph.with_relation(
                    Relation(a.arg_id, b.arg_id, Polarity.SUPPORT, HEURISTIC_LINK_WEIGHT)
                )
                existing.add(triple)
    return graph


def run_debate(
    case: PatientCase,
    roster: TeamRoster,
    options: list[CareOption],
    evidence_corpus: list[EvidenceDoc],
    cfg: DebateConfig = DebateConfig(),
    backend=None,
    scorer_weights: ScorerWeights = ScorerWeights(),
) -> ArgumentGraph:
    if not roster.roles:
        raise ValidationError("roster must be nonempty")
    if not options:
        raise ValidationError("options must be nonempty")
    if backend is None:
        backend = resolve_backend(cfg)

    graph = ArgumentGraph()
    for option in options:
        graph = graph.with_option(option)

    evidence_by_option: dict[str, list[EvidenceDoc]] = {
        option.option_id: retrieve_evidence(
            build_query(case, option), evidence_corpus, cfg.retrieval_top_k
        )
        for option in options
    }

    for round_no in range(1, cfg.rounds + 1):
        for role in roster.roles:
            for option in options:
                evidence = evidence_by_option[option.option_id]
                priors = tuple(
                    PriorArgument(
                        arg_id=a.arg_id,
                        content=a.content,
                        stance=a.stance.value,
                        role=a.role.value,
                        tau=a.tau,
                    )
                    for a in graph.arguments_for_option(option.option_id)
                )
                request = BackendRequest(
                    case=case,
                    option=option,
                    role=role,
                    round=round_no,
                    prior_arguments=priors,
                    evidence=tuple(evidence),
                )
                response = backend(request)
                if not isinstance(response, BackendResponse):
                    response = BackendResponse.from_doc(response)

                support_id = _arg_id(role, option.option_id, "support", round_no)
                challenge_id = _arg_id(role, option.option_id, "challenge", round_no)
                graph = _insert_argument(
                    graph, support_id, response.support_argument, Stance.SUPPORT,
                    role, option.option_id, case, evidence, scorer_weights,
                )
                graph = _insert_argument(
                    graph, challenge_id, response.challenge_argument, Stance.CHALLENGE,
                    role, option.option_id, case, evidence, scorer_weights,
                )
                graph = _apply_relations(graph, response, support_id, challenge_id)

    if cfg.heuristic_linker:
        graph = _link_co_citations(graph)
    return graph

"""Phases 1-2: complexity, recruitment, retrieval, options, debate."""

from .backends import (
    BackendRequest,
    BackendResponse,
    ExternalBackend,
    PriorArgument,
    ProposedArgument,
    ProposedRelation,
    scripted_backend,
)
from .complexity import ComplexityLevel, assess_complexity
from .debate import DebateConfig, build_query, run_debate
from .options import generate_options
from .recruit import TeamRoster, recruit_team
from .retrieval import load_corpus, retrieve_evidence

__all__ = [
    "BackendRequest",
    "BackendResponse",
    "ComplexityLevel",
    "DebateConfig",
    "ExternalBackend",
    "PriorArgument",
    "ProposedArgument",
    "ProposedRelation",
    "TeamRoster",
    "assess_complexity",
    "build_query",
    "generate_options",
    "load_corpus",
    "recruit_team",
    "retrieve_evidence",
    "run_debate",
    "scripted_backend",
]

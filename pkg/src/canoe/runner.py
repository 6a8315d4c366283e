"""End-to-end orchestration shared by the CLI and the HTTP service.

run_case drives Phases 1-2 into a persisted contesting session;
plan_session drives Phase 4 on an approved one. Both are deterministic
given their inputs and the clock.
"""

from __future__ import annotations

from pathlib import Path

from .argcore import CareOption, EvidenceDoc, PatientCase, Role
from .clock import timestamp
from .contestation import (
    ContestationSession,
    SessionConfigs,
    commit,
    init_session_dir,
    mark_planned,
    open_session,
)
from .pipeline import (
    assess_complexity,
    build_query,
    generate_options,
    recruit_team,
    retrieve_evidence,
    run_debate,
)
from .plangen import CalendarState, schedule_tasks, synthesize_plan
from .semantics import score_all_options


def collect_session_evidence(
    case: PatientCase,
    options: list[CareOption],
    corpus: list[EvidenceDoc],
    top_k: int,
) -> list[EvidenceDoc]:
    """Union of every option's retrieved docs, keeping each doc's best
    similarity. Round-tripped through serialization so the session scores
    edits against exactly the numbers stored on disk."""
    best: dict[str, EvidenceDoc] = {}
    for option in options:
        for doc in retrieve_evidence(build_query(case, option), corpus, top_k):
            kept = best.get(doc.doc_id)
            if kept is None or doc.similarity > kept.similarity:
                best[doc.doc_id] = doc
    docs = [EvidenceDoc.from_doc(d.to_doc()) for d in best.values()]
    docs.sort(key=lambda d: d.doc_id)
    return docs


def run_case(
    case: PatientCase,
    corpus: list[EvidenceDoc],
    out_dir: str | Path,
    configs: SessionConfigs | None = None,
    backend=None,
    session_id: str | None = None,
) -> ContestationSession:
    configs = configs or SessionConfigs()
    complexity = assess_complexity(case)
    roster = recruit_team(case, complexity)
    options = generate_options(case)
    graph = run_debate(
        case,
        roster,
        options,
        corpus,
        cfg=configs.debate,
        backend=backend,
        scorer_weights=configs.scorer,
    )
    evidence = collect_session_evidence(case, options, corpus, configs.debate.retrieval_top_k)
    degrees = score_all_options(graph, configs.solver, configs.aggregation)
    session = open_session(
        case,
        graph,
        degrees,
        configs,
        session_id=session_id,
        evidence=evidence,
        complexity=complexity,
        roster=roster,
        created_at=timestamp(),
    )
    init_session_dir(out_dir, session)
    return session


def plan_session(
    session: ContestationSession,
    session_dir: str | Path,
    calendar: CalendarState | None = None,
    actor: Role = Role.HUMAN_CARE_PLANNER,
) -> dict:
    """Synthesize, schedule, record, persist. Returns the plan document."""
    prev_audit_len = len(session.audit)
    plan = synthesize_plan(session)
    tasks = schedule_tasks(plan, calendar if calendar is not None else CalendarState())
    plan_doc = plan.to_doc(tasks)
    mark_planned(session, plan_doc, actor)
    commit(session_dir, session, prev_audit_len)
    return plan_doc

"""Phase-4 plan synthesis: validated arguments and option scores become a
tiered, cited intervention plan.

Tier thresholds live in plan_config.json, not code; the neutral 0.5
lands in the conditional tier by design, so an undebated option is
"possible, with caveats" rather than endorsed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from ..argcore import CareOption, Role, Stance
from ..canonical import round9
from ..clock import timestamp
from ..contestation import ContestationSession
from ..errors import OutOfRange, ValidationError, WrongPhase

NO_CHALLENGES_NOTE = "no challenges recorded"
RECOMMENDED_TIERS = ("recommended_high", "recommended")
MITIGATION_NOTE_COUNT = 2


@lru_cache(maxsize=None)
def plan_config() -> dict:
    text = resources.files("canoe.plangen.data").joinpath("plan_config.json").read_text("utf-8")
    doc = json.loads(text)
    if doc.get("format_version") != 1:
        raise ValidationError("unsupported plan_config format_version")
    return doc


def tier_rank(tier: str) -> int:
    for i, band in enumerate(plan_config()["tiers"]):
        if band["tier"] == tier:
            return i
    raise ValidationError(f"unknown tier: {tier!r}")


def tier_option(score: float) -> str:
    if not 0.0 <= score <= 1.0:
        raise OutOfRange(f"score out of [0,1]: {score}")
    for band in plan_config()["tiers"]:
        if score >= band["min_score"]:
            return band["tier"]
    raise ValidationError("tier bands do not cover the score range")


@dataclass(frozen=True)
class PlanEntry:
    option: CareOption
    score: float
    tier: str
    assigned_role: Role
    supporting_citations: tuple[str, ...]
    challenging_citations: tuple[str, ...]
    evidence_citations: tuple[str, ...]
    mitigation_notes: tuple[str, ...]

    def to_doc(self) -> dict:
        return {
            "option": self.option.to_doc(),
            "score": round9(self.score),
            "tier": self.tier,
            "assigned_role": self.assigned_role.value,
            "supporting_citations": list(self.supporting_citations),
            "challenging_citations": list(self.challenging_citations),
            "evidence_citations": list(self.evidence_citations),
            "mitigation_notes": list(self.mitigation_notes),
        }


@dataclass(frozen=True)
class CarePlan:
    plan_id: str
    case_id: str
    source_session: str
    generated_at: str
    entries: tuple[PlanEntry, ...] = field(default_factory=tuple)

    def to_doc(self, tasks: list | None = None) -> dict:
        return {
            "format_version": 1,
            "plan_id": self.plan_id,
            "case_id": self.case_id,
            "source_session": self.source_session,
            "generated_at": self.generated_at,
            "entries": [e.to_doc() for e in self.entries],
            "tasks": [t.to_doc() for t in tasks] if tasks is not None else [],
        }


def _build_entry(session: ContestationSession, option_id: str) -> PlanEntry:
    graph = session.graph
    degrees = session.degrees.degrees
    score = session.degrees.option_scores[option_id]

    def ranked(stance: Stance) -> list:
        args = graph.arguments_for_option(option_id, stance)
        return sorted(args, key=lambda a: (-degrees[a.arg_id], a.arg_id))

    supporters = ranked(Stance.SUPPORT)
    challengers = ranked(Stance.CHALLENGE)
    tier = tier_option(score)

    evidence: set[str] = set()
    for arg in supporters + challengers:
        evidence.update(arg.cited_evidence)

    mitigation: tuple[str, ...] = ()
    if tier == "conditional":
        notes = [a.content for a in challengers[:MITIGATION_NOTE_COUNT]]
        mitigation = tuple(notes) if notes else (NO_CHALLENGES_NOTE,)

    return PlanEntry(
        option=graph.options[option_id],
        score=score,
        tier=tier,
        assigned_role=supporters[0].role if supporters else Role.CARE_COORDINATOR,
        supporting_citations=tuple(a.arg_id for a in supporters),
        challenging_citations=tuple(a.arg_id for a in challengers),
        evidence_citations=tuple(sorted(evidence)),
        mitigation_notes=mitigation,
    )


def synthesize_plan(session: ContestationSession) -> CarePlan:
    """Pure synthesis over an approved session; the caller records the
    result on the session (advancing it to `planned`) and schedules."""
    if session.phase != "approved":
        raise WrongPhase(f"cannot synthesize a plan in phase {session.phase!r}")
    entries = [_build_entry(session, oid) for oid in session.graph.option_ids()]
    entries.sort(key=lambda e: (tier_rank(e.tier), -e.score, e.option.option_id))
    return CarePlan(
        plan_id=f"plan-{session.case.case_id}",
        case_id=session.case.case_id,
        source_session=session.session_id,
        generated_at=timestamp(),
        entries=tuple(entries),
    )

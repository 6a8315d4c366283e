"""Phase-3 contestation sessions: human edits, revalidation, approval.

A session owns one argument graph, its degree assignment, and an audit
log explaining every divergence from the debated graph. Edits never
trigger solving on their own; degrees go stale until an explicit
revalidate. Stale degrees are tracked by a numeric fingerprint over
exactly the solver inputs (taus, stances, targets, relations), so
status-only changes such as approval bulk-accepts do not invalidate
them.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..argcore import (
    Argument,
    ArgumentGraph,
    ArgumentStatus,
    DegreeAssignment,
    EvidenceDoc,
    PatientCase,
    Relation,
    Role,
    graph_hash,
)
from ..argcore.model import HUMAN_ROLES
from ..canonical import content_hash, round9
from ..clock import timestamp
from ..errors import (
    BrokenChain,
    CanoeError,
    InvalidPayload,
    PendingArguments,
    UnknownArgument,
    UnknownTarget,
    UnsolvedGraph,
    WrongPhase,
)
from ..pipeline.complexity import ComplexityLevel
from ..pipeline.debate import DebateConfig
from ..pipeline.recruit import TeamRoster
from ..semantics import (
    AggregationConfig,
    ScorerWeights,
    SolverConfig,
    score_all_options,
    score_intrinsic,
)
from .audit import GENESIS_HASH, AuditEntry, make_entry, verify_chain

EDIT_KINDS = ("accept", "reject", "modify", "add", "pin_tau", "add_relation")

PHASES = ("debated", "contesting", "approved", "planned")


def solver_fingerprint(graph: ArgumentGraph) -> str:
    """Hash of exactly the inputs the solver and aggregator read."""
    return content_hash(
        {
            "args": {
                aid: [
                    round9(graph.arguments[aid].tau),
                    graph.arguments[aid].stance.value,
                    graph.arguments[aid].target_option,
                ]
                for aid in graph.argument_ids()
            },
            "relations": [r.to_doc() for r in graph.sorted_relations()],
        }
    )


@dataclass(frozen=True)
class SessionConfigs:
    solver: SolverConfig = SolverConfig()
    aggregation: AggregationConfig = AggregationConfig()
    debate: DebateConfig = DebateConfig()
    scorer: ScorerWeights = ScorerWeights()

    def to_doc(self) -> dict:
        return {
            "solver": self.solver.to_doc(),
            "aggregation": self.aggregation.to_doc(),
            "debate": self.debate.to_doc(),
            "scorer": self.scorer.to_doc(),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "SessionConfigs":
        return cls(
            solver=SolverConfig.from_doc(doc.get("solver", {})),
            aggregation=AggregationConfig.from_doc(doc.get("aggregation", {})),
            debate=DebateConfig.from_doc(doc.get("debate", {})),
            scorer=ScorerWeights.from_doc(doc.get("scorer", {})),
        )


@dataclass(frozen=True)
class EditAction:
    actor: Role
    kind: str
    target: str | None = None
    payload: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.actor not in HUMAN_ROLES:
            raise InvalidPayload(f"edit actor must be a human role, got {self.actor.value}")
        if self.kind not in EDIT_KINDS:
            raise InvalidPayload(f"unknown edit kind: {self.kind!r}")
        needs_target = self.kind in ("accept", "reject", "modify", "pin_tau")
        if needs_target and not self.target:
            raise InvalidPayload(f"{self.kind} requires a target argument")
        if not needs_target and self.kind != "add_relation" and self.target:
            raise InvalidPayload(f"{self.kind} takes no target")

    def to_doc(self) -> dict:
        doc: dict = {"actor": self.actor.value, "kind": self.kind, "payload": self.payload}
        if self.target is not None:
            doc["target"] = self.target
        return doc

    @classmethod
    def from_doc(cls, doc: dict) -> "EditAction":
        try:
            return cls(
                actor=Role(doc["actor"]),
                kind=str(doc["kind"]),
                target=str(doc["target"]) if doc.get("target") else None,
                payload=dict(doc.get("payload", {})),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidPayload(f"malformed edit action: {exc}") from exc


@dataclass
class ContestationSession:
    session_id: str
    case: PatientCase
    graph: ArgumentGraph
    degrees: DegreeAssignment
    phase: str
    audit: list[AuditEntry]
    configs: SessionConfigs
    evidence: list[EvidenceDoc] = field(default_factory=list)
    complexity: ComplexityLevel | None = None
    roster: TeamRoster | None = None
    created_at: str = ""
    degrees_fingerprint: str = ""
    plan_doc: dict | None = None

    @property
    def degrees_stale(self) -> bool:
        return self.degrees_fingerprint != solver_fingerprint(self.graph)

    def pending_ids(self) -> list[str]:
        return [
            aid
            for aid in self.graph.argument_ids()
            if self.graph.arguments[aid].status == ArgumentStatus.PENDING
        ]

    def record_doc(self) -> dict:
        """The session.json document (state only; graph/degrees live in their own files)."""
        return {
            "format_version": 1,
            "session_id": self.session_id,
            "case_id": self.case.case_id,
            "phase": self.phase,
            "created_at": self.created_at,
            "complexity": self.complexity.to_doc() if self.complexity else None,
            "roster": self.roster.to_doc() if self.roster else None,
            "configs": self.configs.to_doc(),
        }

    def summary_doc(self) -> dict:
        """The API's session view. Stale degrees are withheld, never shown."""
        stale = self.degrees_stale
        return {
            "session": self.record_doc(),
            "degrees_stale": stale,
            "degrees": None if stale else self.degrees.to_doc(self.degrees_fingerprint),
            "pending_count": len(self.pending_ids()),
            "audit_length": len(self.audit),
        }


def _append_entry(
    session: ContestationSession,
    actor: Role,
    kind: str,
    target: str | None,
    payload: dict,
    pre_hash: str,
    post_hash: str,
) -> None:
    prev = session.audit[-1].entry_hash if session.audit else GENESIS_HASH
    entry = make_entry(
        seq=len(session.audit) + 1,
        timestamp=timestamp(),
        actor=actor.value,
        kind=kind,
        target=target,
        payload=payload,
        pre_hash=pre_hash,
        post_hash=post_hash,
        prev_entry_hash=prev,
    )
    session.audit.append(entry)


def open_session(
    case: PatientCase,
    graph: ArgumentGraph,
    degrees: DegreeAssignment | None,
    configs: SessionConfigs,
    session_id: str | None = None,
    evidence: list[EvidenceDoc] | None = None,
    complexity: ComplexityLevel | None = None,
    roster: TeamRoster | None = None,
    created_at: str | None = None,
) -> ContestationSession:
    if degrees is None:
        raise UnsolvedGraph("cannot open a session over an unsolved graph")
    missing = set(graph.argument_ids()) - set(degrees.degrees)
    if missing:
        raise UnsolvedGraph(f"degrees missing for {len(missing)} arguments")
    return ContestationSession(
        session_id=session_id or f"sess-{case.case_id}",
        case=case,
        graph=graph,
        degrees=degrees,
        phase="contesting",
        audit=[],
        configs=configs,
        evidence=list(evidence or []),
        complexity=complexity,
        roster=roster,
        created_at=created_at or timestamp(),
        degrees_fingerprint=solver_fingerprint(graph),
    )


def _rescore(session: ContestationSession, arg: Argument) -> float:
    return score_intrinsic(arg, session.case, session.evidence, session.configs.scorer)


def _require_target(session: ContestationSession, arg_id: str) -> Argument:
    try:
        return session.graph.get_argument(arg_id)
    except UnknownArgument:
        raise UnknownTarget(f"no live argument {arg_id!r}") from None


def _apply_add(session: ContestationSession, action: EditAction, seq: int):
    doc = action.payload.get("argument")
    if not isinstance(doc, dict):
        raise InvalidPayload("add requires payload.argument")
    doc = dict(doc)
    doc.setdefault("arg_id", f"h-{seq}")
    doc["status"] = ArgumentStatus.ADDED.value
    doc.setdefault("tau", 0.0)
    doc.pop("tau_pinned", None)
    try:
        arg = Argument.from_doc(doc)
        arg = replace(arg, tau=_rescore(session, arg), tau_pinned=False)
        new_graph = session.graph.with_argument(arg)
    except CanoeError as exc:
        raise InvalidPayload(f"bad add payload: {exc.message}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidPayload(f"bad add payload: {exc}") from exc
    return new_graph, {"argument": arg.to_doc()}


def _apply_edit_kind(
    session: ContestationSession, action: EditAction, seq: int
) -> tuple[ArgumentGraph, dict]:
    """Return (new graph, audit payload) for one edit action."""
    graph = session.graph
    kind = action.kind

    if kind == "accept":
        arg = _require_target(session, action.target)
        new = replace(arg, status=ArgumentStatus.ACCEPTED)
        return graph.replace_argument(new), {}

    if kind == "reject":
        arg = _require_target(session, action.target)
        removed_relations = [
            r.to_doc()
            for r in graph.sorted_relations()
            if r.source == arg.arg_id or r.target == arg.arg_id
        ]
        # tombstone: the audit preserves what the graph forgets
        payload = {"removed": arg.to_doc(), "removed_relations": removed_relations}
        return graph.without_argument(arg.arg_id), payload

    if kind == "modify":
        arg = _require_target(session, action.target)
        content = action.payload.get("content")
        if not isinstance(content, str) or not content:
            raise InvalidPayload("modify requires nonempty payload.content")
        new = replace(arg, content=content, status=ArgumentStatus.MODIFIED)
        if not new.tau_pinned:
            new = replace(new, tau=_rescore(session, new))
        return graph.replace_argument(new), {"content": content, "tau": round9(new.tau)}

    if kind == "add":
        return _apply_add(session, action, seq)

    if kind == "pin_tau":
        arg = _require_target(session, action.target)
        value = action.payload.get("tau")
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise InvalidPayload("pin_tau requires numeric payload.tau")
        value = float(value)
        if not 0.0 <= value <= 1.0:
            raise InvalidPayload(f"pinned tau out of [0,1]: {value}")
        new = replace(arg, tau=round9(value), tau_pinned=True)
        return graph.replace_argument(new), {"tau": round9(value)}

    if kind == "add_relation":
        doc = action.payload.get("relation")
        if not isinstance(doc, dict):
            raise InvalidPayload("add_relation requires payload.relation")
        try:
            rel = Relation.from_doc(doc)
        except (CanoeError, KeyError, TypeError, ValueError) as exc:
            raise InvalidPayload(f"bad relation payload: {exc}") from exc
        if rel.source not in graph.arguments or rel.target not in graph.arguments:
            raise UnknownTarget("relation endpoint is not a live argument")
        try:
            return graph.with_relation(rel), {"relation": rel.to_doc()}
        except CanoeError as exc:
            raise InvalidPayload(f"bad relation payload: {exc.message}") from exc

    raise InvalidPayload(f"unknown edit kind: {kind!r}")


def apply_edit(session: ContestationSession, action: EditAction) -> ContestationSession:
    if session.phase != "contesting":
        raise WrongPhase(f"cannot edit in phase {session.phase!r}")
    pre = graph_hash(session.graph)
    seq = len(session.audit) + 1
    new_graph, extra_payload = _apply_edit_kind(session, action, seq)
    payload = {**action.payload, **extra_payload}
    session.graph = new_graph
    _append_entry(
        session, action.actor, action.kind, action.target, payload,
        pre_hash=pre, post_hash=graph_hash(new_graph),
    )
    return session


def revalidate(
    session: ContestationSession, actor: Role = Role.HUMAN_REVIEWER
) -> ContestationSession:
    if session.phase != "contesting":
        raise WrongPhase(f"cannot revalidate in phase {session.phase!r}")
    assignment = score_all_options(
        session.graph, session.configs.solver, session.configs.aggregation
    )
    session.degrees = assignment
    session.degrees_fingerprint = solver_fingerprint(session.graph)
    h = graph_hash(session.graph)
    _append_entry(
        session, actor, "revalidate", None,
        payload={
            "iterations_used": assignment.iterations_used,
            "residual": round9(assignment.residual),
        },
        pre_hash=h, post_hash=h,
    )
    return session


def approve(
    session: ContestationSession,
    force: bool = False,
    actor: Role = Role.HUMAN_CARE_PLANNER,
) -> ContestationSession:
    if session.phase != "contesting":
        raise WrongPhase(f"cannot approve in phase {session.phase!r}")
    if actor != Role.HUMAN_CARE_PLANNER:
        raise InvalidPayload("approval requires the human_care_planner actor")
    pending = session.pending_ids()
    if pending and not force:
        raise PendingArguments(
            f"{len(pending)} arguments still pending", pending=pending
        )
    # the approved state must carry degrees that match the frozen graph
    if session.degrees_stale:
        revalidate(session, actor=actor)

    pre = graph_hash(session.graph)
    graph = session.graph
    for aid in pending:
        graph = graph.replace_argument(
            replace(graph.get_argument(aid), status=ArgumentStatus.ACCEPTED)
        )
    session.graph = graph
    session.phase = "approved"
    _append_entry(
        session, actor, "approve", None,
        payload={"force": force, "bulk_accepted": pending},
        pre_hash=pre, post_hash=graph_hash(graph),
    )
    return session


def mark_planned(session: ContestationSession, plan_doc: dict, actor: Role) -> None:
    """Record plan generation in the chain and advance the phase."""
    if session.phase != "approved":
        raise WrongPhase(f"cannot plan in phase {session.phase!r}")
    session.plan_doc = plan_doc
    session.phase = "planned"
    h = graph_hash(session.graph)
    # the full plan rides in the audit so replay alone can rebuild plan.json
    _append_entry(
        session, actor, "plan", None,
        payload={"plan_id": plan_doc["plan_id"], "plan": plan_doc},
        pre_hash=h, post_hash=h,
    )


def replay(
    audit: list[AuditEntry],
    initial_graph: ArgumentGraph,
    configs: SessionConfigs,
    case: PatientCase,
    evidence: list[EvidenceDoc] | None = None,
    session_id: str | None = None,
    complexity: ComplexityLevel | None = None,
    roster: TeamRoster | None = None,
    created_at: str | None = None,
) -> ContestationSession:
    """Rebuild a session from its debated graph and audit log.

    Every action is re-applied (taus re-scored, degrees re-solved) and the
    resulting graph hash is compared against the recorded post_hash, so a
    replay that succeeds is a proof the log explains the final state.
    """
    verify_chain(audit, initial_graph_hash=graph_hash(initial_graph))

    degrees = score_all_options(initial_graph, configs.solver, configs.aggregation)
    session = open_session(
        case,
        initial_graph,
        degrees,
        configs,
        session_id=session_id,
        evidence=evidence,
        complexity=complexity,
        roster=roster,
        created_at=created_at or (audit[0].timestamp if audit else None),
    )

    for entry in audit:
        actor = Role(entry.actor)
        if entry.kind in EDIT_KINDS:
            action = EditAction(
                actor=actor,
                kind=entry.kind,
                target=entry.target,
                payload=entry.payload,
            )
            new_graph, _ = _apply_edit_kind(session, action, entry.seq)
            session.graph = new_graph
        elif entry.kind == "revalidate":
            session.degrees = score_all_options(
                session.graph, configs.solver, configs.aggregation
            )
            session.degrees_fingerprint = solver_fingerprint(session.graph)
        elif entry.kind == "approve":
            for aid in entry.payload.get("bulk_accepted", []):
                session.graph = session.graph.replace_argument(
                    replace(session.graph.get_argument(aid), status=ArgumentStatus.ACCEPTED)
                )
            session.phase = "approved"
        elif entry.kind == "plan":
            session.phase = "planned"
            session.plan_doc = entry.payload.get("plan")
        if graph_hash(session.graph) != entry.post_hash:
            raise BrokenChain("replayed graph diverges from recorded post_hash", seq=entry.seq)

    session.audit = list(audit)
    return session

"""Session persistence: one directory per session, plain canonical files.

    session.json          state record (phase, configs, roster, complexity)
    case.json             the patient case
    evidence.json         every document the debate retrieved
    graph_debated.json    Phase-2 output, frozen; the replay baseline
    degrees_debated.json  degrees of the debated graph
    graph.json            current graph
    degrees.json          current degrees + solver fingerprint
    audit.log             append-only hash-chained entries, one per line
    plan.json             Phase-4 output, once planned

The audit log is the source of truth: the current files are a cache of
replay(debated graph, audit). Loading verifies the chain and, when the
cache does not match the chain tip (a crash between append and write),
rebuilds it by replay.
"""

from __future__ import annotations

from pathlib import Path

from ..argcore import DegreeAssignment, EvidenceDoc, PatientCase, doc_to_graph, graph_to_doc
from ..canonical import canonical_bytes, read_json, sha256_hex, write_json
from ..errors import BrokenChain, DuplicateId, UnknownSession
from ..pipeline.complexity import ComplexityLevel
from ..pipeline.recruit import TeamRoster
from .audit import append_entry, load_audit, verify_chain
from .session import ContestationSession, SessionConfigs
from .session import replay as replay_session

SESSION_FILE = "session.json"
CASE_FILE = "case.json"
EVIDENCE_FILE = "evidence.json"
DEBATED_GRAPH_FILE = "graph_debated.json"
DEBATED_DEGREES_FILE = "degrees_debated.json"
GRAPH_FILE = "graph.json"
DEGREES_FILE = "degrees.json"
AUDIT_FILE = "audit.log"
PLAN_FILE = "plan.json"


def _graph_doc_hash(doc: dict) -> str:
    return sha256_hex(canonical_bytes(doc))


def evidence_doc(docs: list[EvidenceDoc]) -> dict:
    return {
        "format_version": 1,
        "documents": [d.to_doc() for d in sorted(docs, key=lambda d: d.doc_id)],
    }


def init_session_dir(session_dir: str | Path, session: ContestationSession) -> Path:
    """Write a freshly opened session to disk. Refuses to overwrite."""
    session_dir = Path(session_dir)
    session_dir.mkdir(parents=True, exist_ok=True)
    if (session_dir / SESSION_FILE).exists():
        raise DuplicateId(f"session already exists in {session_dir}")

    graph_doc = graph_to_doc(session.graph)
    degrees_doc = session.degrees.to_doc(session.degrees_fingerprint)
    write_json(session_dir / CASE_FILE, session.case.to_doc(), fsync=True)
    write_json(session_dir / EVIDENCE_FILE, evidence_doc(session.evidence), fsync=True)
    write_json(session_dir / DEBATED_GRAPH_FILE, graph_doc, fsync=True)
    write_json(session_dir / DEBATED_DEGREES_FILE, degrees_doc, fsync=True)
    write_json(session_dir / GRAPH_FILE, graph_doc, fsync=True)
    write_json(session_dir / DEGREES_FILE, degrees_doc, fsync=True)
    (session_dir / AUDIT_FILE).touch()
    write_json(session_dir / SESSION_FILE, session.record_doc(), fsync=True)
    return session_dir


def commit(session_dir: str | Path, session: ContestationSession, prev_audit_len: int) -> None:
    """Persist a mutation: audit lines first (the truth), then the cache."""
    session_dir = Path(session_dir)
    for entry in session.audit[prev_audit_len:]:
        append_entry(session_dir / AUDIT_FILE, entry)
    write_json(session_dir / GRAPH_FILE, graph_to_doc(session.graph), fsync=True)
    write_json(
        session_dir / DEGREES_FILE,
        session.degrees.to_doc(session.degrees_fingerprint),
        fsync=True,
    )
    write_json(session_dir / SESSION_FILE, session.record_doc(), fsync=True)
    if session.plan_doc is not None:
        write_json(session_dir / PLAN_FILE, session.plan_doc, fsync=True)


def load_evidence(session_dir: Path) -> list[EvidenceDoc]:
    doc = read_json(session_dir / EVIDENCE_FILE)
    return [EvidenceDoc.from_doc(d) for d in doc["documents"]]


def load_session(session_dir: str | Path) -> ContestationSession:
    session_dir = Path(session_dir)
    if not (session_dir / SESSION_FILE).is_file():
        raise UnknownSession(f"no session at {session_dir}")

    record = read_json(session_dir / SESSION_FILE)
    case = PatientCase.from_doc(read_json(session_dir / CASE_FILE))
    configs = SessionConfigs.from_doc(record.get("configs", {}))
    evidence = load_evidence(session_dir)
    complexity = (
        ComplexityLevel.from_doc(record["complexity"]) if record.get("complexity") else None
    )
    roster = TeamRoster.from_doc(record["roster"]) if record.get("roster") else None

    debated_doc = read_json(session_dir / DEBATED_GRAPH_FILE)
    debated_hash = _graph_doc_hash(debated_doc)
    audit = load_audit(session_dir / AUDIT_FILE)
    verify_chain(audit, initial_graph_hash=debated_hash)
    expected_tip = audit[-1].post_hash if audit else debated_hash

    graph_path = session_dir / GRAPH_FILE
    degrees_path = session_dir / DEGREES_FILE
    cache_ok = graph_path.is_file() and degrees_path.is_file()
    if cache_ok:
        graph_doc = read_json(graph_path)
        cache_ok = _graph_doc_hash(graph_doc) == expected_tip

    if not cache_ok:
        # crash between audit append and cache write: rebuild from the log
        session = replay_session(
            audit,
            doc_to_graph(debated_doc),
            configs,
            case,
            evidence=evidence,
            session_id=record["session_id"],
            complexity=complexity,
            roster=roster,
            created_at=record.get("created_at", ""),
        )
        commit(session_dir, session, prev_audit_len=len(audit))
        return session

    degrees_doc = read_json(degrees_path)
    session = ContestationSession(
        session_id=record["session_id"],
        case=case,
        graph=doc_to_graph(graph_doc),
        degrees=DegreeAssignment.from_doc(degrees_doc),
        phase=record["phase"],
        audit=audit,
        configs=configs,
        evidence=evidence,
        complexity=complexity,
        roster=roster,
        created_at=record.get("created_at", ""),
        degrees_fingerprint=degrees_doc.get("graph_fingerprint", ""),
        plan_doc=read_json(session_dir / PLAN_FILE)
        if (session_dir / PLAN_FILE).is_file()
        else None,
    )
    return session


def replay_check(session_dir: str | Path) -> tuple[ContestationSession, list[str]]:
    """Full verification: replay the audit and diff against the stored cache.

    Returns the replayed session and a list of mismatch descriptions
    (empty when the directory is exactly what the log explains).
    """
    session_dir = Path(session_dir)
    if not (session_dir / SESSION_FILE).is_file():
        raise UnknownSession(f"no session at {session_dir}")
    record = read_json(session_dir / SESSION_FILE)
    case = PatientCase.from_doc(read_json(session_dir / CASE_FILE))
    configs = SessionConfigs.from_doc(record.get("configs", {}))
    evidence = load_evidence(session_dir)
    debated_doc = read_json(session_dir / DEBATED_GRAPH_FILE)
    audit = load_audit(session_dir / AUDIT_FILE)

    replayed = replay_session(
        audit,
        doc_to_graph(debated_doc),
        configs,
        case,
        evidence=evidence,
        session_id=record["session_id"],
        complexity=ComplexityLevel.from_doc(record["complexity"])
        if record.get("complexity")
        else None,
        roster=TeamRoster.from_doc(record["roster"]) if record.get("roster") else None,
        created_at=record.get("created_at", ""),
    )

    mismatches: list[str] = []

    def compare(name: str, expected: bytes) -> None:
        path = session_dir / name
        actual = path.read_bytes() if path.is_file() else None
        if actual != expected:
            mismatches.append(f"{name} does not match the replayed state")

    compare(GRAPH_FILE, canonical_bytes(graph_to_doc(replayed.graph)))
    compare(
        DEGREES_FILE,
        canonical_bytes(replayed.degrees.to_doc(replayed.degrees_fingerprint)),
    )
    if record["phase"] != replayed.phase:
        mismatches.append(
            f"session.json phase {record['phase']!r} != replayed {replayed.phase!r}"
        )
    if replayed.plan_doc is not None:
        compare(PLAN_FILE, canonical_bytes(replayed.plan_doc))
    return replayed, mismatches


def raise_on_mismatch(session_dir: str | Path) -> ContestationSession:
    session, mismatches = replay_check(session_dir)
    if mismatches:
        raise BrokenChain("; ".join(mismatches), seq=len(session.audit))
    return session

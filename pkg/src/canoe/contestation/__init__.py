"""Phase-3 human contestation: sessions, audit chain, persistence, exports."""

from .audit import GENESIS_HASH, AuditEntry, load_audit, verify_chain
from .export import audit_csv, export_dot, participation_csv
from .session import (
    ContestationSession,
    EditAction,
    SessionConfigs,
    apply_edit,
    approve,
    mark_planned,
    open_session,
    replay,
    revalidate,
    solver_fingerprint,
)
from .store import commit, init_session_dir, load_session, raise_on_mismatch, replay_check

__all__ = [
    "GENESIS_HASH",
    "AuditEntry",
    "ContestationSession",
    "EditAction",
    "SessionConfigs",
    "apply_edit",
    "approve",
    "audit_csv",
    "commit",
    "export_dot",
    "init_session_dir",
    "load_audit",
    "load_session",
    "mark_planned",
    "open_session",
    "participation_csv",
    "raise_on_mismatch",
    "replay",
    "replay_check",
    "revalidate",
    "solver_fingerprint",
    "verify_chain",
]

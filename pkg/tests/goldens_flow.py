"""One shared definition of the golden lifecycle.

test_goldens.py regenerates the session through this module and compares
bytes against tests/goldens/; scripts/regen_goldens.py imports the same
functions to refresh the checked-in copy. Keeping a single flow definition
means the test can only drift from the script on purpose.
"""

from __future__ import annotations

from pathlib import Path

from canoe.argcore import Role
from canoe.cli import bundled_path, load_case_file
from canoe.contestation import (
    ContestationSession,
    EditAction,
    apply_edit,
    approve,
    commit,
    revalidate,
)
from canoe.pipeline import load_corpus
from canoe.plangen import CalendarState
from canoe.runner import plan_session, run_case

FIXED_TIME = "2026-08-18T12:00:00Z"

GOLDEN_FILES = (
    "session.json",
    "case.json",
    "evidence.json",
    "graph_debated.json",
    "degrees_debated.json",
    "graph.json",
    "degrees.json",
    "audit.log",
    "plan.json",
)

GOLDEN_EDITS = (
    EditAction(
        actor=Role.HUMAN_REVIEWER,
        kind="reject",
        target="registered_nurse-dietitian-consultation-challenge-1",
    ),
    EditAction(
        actor=Role.HUMAN_REVIEWER,
        kind="pin_tau",
        target="nutritionist-dietitian-consultation-support-1",
        payload={"tau": 0.9},
    ),
)


def build_golden_session(out_dir: str | Path) -> ContestationSession:
    """Bundled case, scripted one-round debate, two human edits, approval, plan."""
    case = load_case_file(bundled_path("case.json"))
    corpus = load_corpus(bundled_path("corpus"))
    session = run_case(case, corpus, out_dir)
    for action in GOLDEN_EDITS:
        prev = len(session.audit)
        apply_edit(session, action)
        commit(out_dir, session, prev)
    prev = len(session.audit)
    revalidate(session, actor=Role.HUMAN_REVIEWER)
    commit(out_dir, session, prev)
    prev = len(session.audit)
    approve(session, force=True)
    commit(out_dir, session, prev)
    calendar = CalendarState.load(bundled_path("calendar.json"))
    plan_session(session, out_dir, calendar)
    return session

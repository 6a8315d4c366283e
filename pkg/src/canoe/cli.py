"""The canoe command: end-to-end and piecewise drivers for every phase.

Exit codes: 0 ok, 2 validation, 3 wrong phase, 4 non-convergence,
5 backend failure, 6 broken chain. Every failure also prints one
machine-readable JSON line on stderr.
"""

from __future__ import annotations

import functools
import sys
from importlib import resources
from pathlib import Path

import click

from .argcore import PatientCase, Role, load_graph
from .canonical import canonical_line, read_json, round9, write_json
from .contestation import (
    EditAction,
    SessionConfigs,
    apply_edit,
    approve as approve_session,
    commit,
    export_dot,
    load_session,
    raise_on_mismatch,
    revalidate as revalidate_session,
    solver_fingerprint,
)
from .errors import (
    BackendFailure,
    BrokenChain,
    CanoeError,
    InvalidPayload,
    NonConvergence,
    PendingArguments,
    ValidationError,
    WrongPhase,
)
from .pipeline import DebateConfig, load_corpus
from .plangen import CalendarState
from .runner import plan_session, run_case
from .semantics import AggregationConfig, SolverConfig, score_all_options

EXIT_VALIDATION = 2
EXIT_WRONG_PHASE = 3
EXIT_NON_CONVERGENCE = 4
EXIT_BACKEND_FAILURE = 5
EXIT_BROKEN_CHAIN = 6


def exit_code(exc: CanoeError) -> int:
    if isinstance(exc, BrokenChain):
        return EXIT_BROKEN_CHAIN
    if isinstance(exc, BackendFailure):
        return EXIT_BACKEND_FAILURE
    if isinstance(exc, NonConvergence):
        return EXIT_NON_CONVERGENCE
    if isinstance(exc, (WrongPhase, PendingArguments)):
        return EXIT_WRONG_PHASE
    return EXIT_VALIDATION


def canoe_command(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CanoeError as exc:
            click.echo(canonical_line(exc.to_doc()), err=True)
            sys.exit(exit_code(exc))

    return wrapper


def load_case_file(path: str | Path) -> PatientCase:
    doc = read_json(path)
    if doc.get("format_version", 1) != 1:
        raise ValidationError(f"unsupported case format_version: {doc.get('format_version')!r}")
    return PatientCase.from_doc(doc)


def bundled_path(name: str) -> Path:
    return Path(str(resources.files("canoe.sampledata").joinpath(name)))


def parse_actor(value: str) -> Role:
    try:
        return Role(value)
    except ValueError:
        raise InvalidPayload(f"unknown actor role: {value!r}") from None


def _print_option_scores(option_scores: dict[str, float]) -> None:
    for oid, score in sorted(option_scores.items()):
        click.echo(f"{oid} {round9(score):.9g}")


@click.group()
def main():
    """Contestable care planning: debate, contest, approve, plan."""


@main.command()
@click.argument("case_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--corpus", "corpus_dir", type=click.Path(exists=True, file_okay=False),
              default=None, help="Evidence corpus directory (default: bundled sample corpus).")
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False),
              help="Session directory to create.")
@click.option("--rounds", default=1, show_default=True, help="Debate rounds.")
@click.option("--backend", default="scripted", show_default=True,
              type=click.Choice(["scripted", "external"]))
@click.option("--top-k", default=8, show_default=True, help="Evidence docs per retrieval.")
@click.option("--linker/--no-linker", default=False, show_default=True,
              help="Heuristic co-citation relation linker.")
@canoe_command
def run(case_file, corpus_dir, out_dir, rounds, backend, top_k, linker):
    """Phases 1-2: assess, recruit, retrieve, debate, solve; write a session."""
    case = load_case_file(case_file)
    corpus = load_corpus(corpus_dir or bundled_path("corpus"))
    configs = SessionConfigs(
        debate=DebateConfig(
            rounds=rounds, backend=backend, retrieval_top_k=top_k, heuristic_linker=linker
        )
    )
    session = run_case(case, corpus, out_dir, configs=configs)
    _print_option_scores(session.degrees.option_scores)


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_file", default=None, type=click.Path(dir_okay=False),
              help="Degrees file to write (default: degrees.json beside the graph).")
@click.option("--damping", default=0.5, show_default=True)
@click.option("--tolerance", default=1e-6, show_default=True)
@click.option("--max-iter", "max_iterations", default=10000, show_default=True)
@click.option("--squash", default="clip", show_default=True,
              type=click.Choice(["clip", "logistic"]))
@click.option("--logistic-k", default=4.0, show_default=True)
@click.option("--temperature", default=0.25, show_default=True)
@canoe_command
def solve(graph_file, out_file, damping, tolerance, max_iterations, squash, logistic_k,
          temperature):
    """Standalone solver: graph file in, degrees file out."""
    graph = load_graph(graph_file)
    cfg = SolverConfig(
        squash=squash, logistic_k=logistic_k, damping=damping,
        tolerance=tolerance, max_iterations=max_iterations,
    )
    agg = AggregationConfig(temperature=temperature)
    try:
        assignment = score_all_options(graph, cfg, agg)
    except NonConvergence as exc:
        if exc.partial is not None:
            # leave the partial result on disk for inspection, then fail
            partial_path = Path(out_file) if out_file else Path(graph_file).with_name(
                "degrees.partial.json"
            )
            write_json(partial_path, exc.partial.to_doc())
        raise
    out_path = Path(out_file) if out_file else Path(graph_file).with_name("degrees.json")
    write_json(out_path, assignment.to_doc(solver_fingerprint(graph)))
    click.echo(str(out_path))


@main.command()
@click.argument("session_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--action", "action_file", required=True,
              type=click.Path(exists=True, dir_okay=False), help="EditAction JSON file.")
@canoe_command
def edit(session_dir, action_file):
    """Apply one edit action to a contesting session."""
    session = load_session(session_dir)
    prev = len(session.audit)
    action = EditAction.from_doc(read_json(action_file))
    apply_edit(session, action)
    commit(session_dir, session, prev)
    entry = session.audit[-1]
    click.echo(f"applied {entry.kind} (seq {entry.seq})")


@main.command()
@click.argument("session_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--actor", default=Role.HUMAN_REVIEWER.value, show_default=True)
@canoe_command
def revalidate(session_dir, actor):
    """Re-solve degrees and option scores for the current graph."""
    session = load_session(session_dir)
    prev = len(session.audit)
    revalidate_session(session, actor=parse_actor(actor))
    commit(session_dir, session, prev)
    _print_option_scores(session.degrees.option_scores)


@main.command()
@click.argument("session_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--force", is_flag=True, help="Bulk-accept pending arguments.")
@click.option("--actor", default=Role.HUMAN_CARE_PLANNER.value, show_default=True)
@canoe_command
def approve(session_dir, force, actor):
    """Care-planner approval; freezes the graph and degrees."""
    session = load_session(session_dir)
    prev = len(session.audit)
    approve_session(session, force=force, actor=parse_actor(actor))
    commit(session_dir, session, prev)
    click.echo(f"phase {session.phase}")


@main.command()
@click.argument("session_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--calendar", "calendar_file", default=None,
              type=click.Path(exists=True, dir_okay=False),
              help="Calendar file (default: bundled sample calendar).")
@click.option("--actor", default=Role.HUMAN_CARE_PLANNER.value, show_default=True)
@canoe_command
def plan(session_dir, calendar_file, actor):
    """Phase 4: synthesize the tiered plan and schedule tasks."""
    session = load_session(session_dir)
    calendar = CalendarState.load(calendar_file or bundled_path("calendar.json"))
    plan_doc = plan_session(session, session_dir, calendar, actor=parse_actor(actor))
    for entry in plan_doc["entries"]:
        click.echo(f"{entry['tier']} {entry['option']['option_id']} {entry['score']:.9g}")


@main.command()
@click.argument("session_dir", type=click.Path(exists=True, file_okay=False))
@canoe_command
def replay(session_dir):
    """Verify the audit chain and that it reproduces the stored session."""
    session = raise_on_mismatch(session_dir)
    click.echo(f"replay ok ({len(session.audit)} entries)")


@main.command(name="export-dot")
@click.argument("session_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--out", "out_file", default=None, type=click.Path(dir_okay=False),
              help="Write to a file instead of stdout.")
@canoe_command
def export_dot_cmd(session_dir, out_file):
    """Argument graph as DOT: support solid, attack dashed."""
    session = load_session(session_dir)
    dot = export_dot(session.graph, session.degrees.degrees)
    if out_file:
        Path(out_file).write_text(dot, encoding="utf-8")
        click.echo(out_file)
    else:
        click.echo(dot, nl=False)


@main.command()
@click.option("--port", default=None, type=int, help="Listen port (default: CANOE_PORT or 8400).")
@click.option("--data", "data_dir", default=None, type=click.Path(file_okay=False),
              help="Data directory (default: CANOE_DATA_DIR or ./canoe-data).")
@canoe_command
def serve(port, data_dir):
    """Start the HTTP service."""
    import uvicorn

    from .service.app import create_app, resolve_settings

    settings = resolve_settings(port=port, data_dir=data_dir)
    app = create_app(
        data_dir=settings["data_dir"],
        corpus_dir=settings["corpus_dir"],
        web_dir=settings["web_dir"],
    )
    uvicorn.run(app, host="127.0.0.1", port=settings["port"], log_level="warning")


if __name__ == "__main__":
    main()

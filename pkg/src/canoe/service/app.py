"""FastAPI application: file-backed persistence, per-session write locks.

Every response body is rendered through the canonical serializer so the
HTTP surface is byte-stable, and every defined error response carries a
code from the closed ApiError enum.
"""

from __future__ import annotations

import json
import os
import threading
from importlib import resources
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..argcore import PatientCase, Role, graph_to_doc, participation_summary
from ..canonical import canonical_bytes, read_json, write_json
from ..contestation import (
    ContestationSession,
    EditAction,
    SessionConfigs,
    apply_edit,
    approve,
    audit_csv,
    commit,
    load_session,
    participation_csv,
    revalidate,
)
from ..errors import (
    CanoeError,
    DuplicateId,
    InvalidPayload,
    NotFoundError,
    UnknownCase,
)
from ..pipeline import load_corpus
from ..plangen import CalendarState
from ..runner import plan_session, run_case

ENV_DATA_DIR = "CANOE_DATA_DIR"
ENV_PORT = "CANOE_PORT"
ENV_CORPUS_DIR = "CANOE_CORPUS_DIR"
ENV_WEB_DIR = "CANOE_WEB_DIR"
DEFAULT_PORT = 8400

HTTP_CODE_MAP = {404: "not_found", 409: "conflict"}


def resolve_settings(port: int | None = None, data_dir: str | None = None) -> dict:
    """CLI flags beat env vars beat defaults."""
    return {
        "port": port if port is not None else int(os.environ.get(ENV_PORT, DEFAULT_PORT)),
        "data_dir": data_dir or os.environ.get(ENV_DATA_DIR, "canoe-data"),
        "corpus_dir": os.environ.get(ENV_CORPUS_DIR),
        "web_dir": os.environ.get(ENV_WEB_DIR),
    }


def cjson(doc: dict, status_code: int = 200) -> Response:
    return Response(
        content=canonical_bytes(doc), status_code=status_code, media_type="application/json"
    )


def wants_csv(request: Request) -> bool:
    return "text/csv" in request.headers.get("accept", "")


def parse_body(raw: bytes) -> dict:
    if not raw:
        return {}
    try:
        doc = json.loads(raw)
    except ValueError:
        raise InvalidPayload("request body is not valid JSON") from None
    if not isinstance(doc, dict):
        raise InvalidPayload("request body must be a JSON object")
    return doc


def required_actor(body: dict) -> Role:
    value = body.get("actor")
    if not value:
        raise InvalidPayload("mutating requests must name an actor role")
    try:
        return Role(value)
    except ValueError:
        raise InvalidPayload(f"unknown actor role: {value!r}") from None


def create_app(
    data_dir: str | Path,
    corpus_dir: str | Path | None = None,
    web_dir: str | Path | None = None,
) -> FastAPI:
    data_dir = Path(data_dir)
    cases_dir = data_dir / "cases"
    sessions_dir = data_dir / "sessions"
    cases_dir.mkdir(parents=True, exist_ok=True)
    sessions_dir.mkdir(parents=True, exist_ok=True)

    sample_root = resources.files("canoe.sampledata")
    corpus_path = Path(corpus_dir) if corpus_dir else Path(str(sample_root / "corpus"))
    corpus = load_corpus(corpus_path)

    app = FastAPI(title="canoe", docs_url=None, redoc_url=None, openapi_url=None)

    # one lock per session id; the registry itself is guarded by meta_lock
    meta_lock = threading.Lock()
    locks: dict[str, threading.Lock] = {}
    sessions: dict[str, ContestationSession] = {}

    def lock_for(session_id: str) -> threading.Lock:
        with meta_lock:
            return locks.setdefault(session_id, threading.Lock())

    def session_dir(session_id: str) -> Path:
        return sessions_dir / session_id

    def get_session(session_id: str) -> ContestationSession:
        # caller holds the session lock
        if session_id not in sessions:
            sessions[session_id] = load_session(session_dir(session_id))
        return sessions[session_id]

    def calendar_state() -> CalendarState:
        local = data_dir / "calendar.json"
        if local.is_file():
            return CalendarState.load(local)
        return CalendarState.load(Path(str(sample_root / "calendar.json")))

    @app.exception_handler(CanoeError)
    async def canoe_error_handler(request: Request, exc: CanoeError) -> Response:
        return cjson(exc.to_doc(), exc.http_status)

    @app.exception_handler(RequestValidationError)
    async def request_validation_handler(
        request: Request, exc: RequestValidationError
    ) -> Response:
        err = InvalidPayload("malformed request", errors=[str(e) for e in exc.errors()])
        return cjson(err.to_doc(), err.http_status)

    @app.exception_handler(StarletteHTTPException)
    async def http_exception_handler(
        request: Request, exc: StarletteHTTPException
    ) -> Response:
        code = HTTP_CODE_MAP.get(exc.status_code, "validation")
        doc = {"code": code, "message": str(exc.detail), "detail": {}}
        return cjson(doc, exc.status_code)

    @app.get("/v1/health")
    def health() -> Response:
        return cjson({"service": "canoe", "status": "ok"})

    @app.post("/v1/cases")
    async def create_case(request: Request) -> Response:
        body = parse_body(await request.body())
        case = PatientCase.from_doc(body)
        path = cases_dir / f"{case.case_id}.json"
        if path.exists():
            raise DuplicateId(f"case already exists: {case.case_id}")
        write_json(path, case.to_doc())
        return cjson(case.to_doc(), 201)

    @app.get("/v1/cases/{case_id}")
    def get_case(case_id: str) -> Response:
        path = cases_dir / f"{case_id}.json"
        if not path.is_file():
            raise UnknownCase(f"unknown case: {case_id}")
        return cjson(read_json(path))

    @app.post("/v1/cases/{case_id}/run")
    async def run_pipeline(case_id: str, request: Request) -> Response:
        path = cases_dir / f"{case_id}.json"
        if not path.is_file():
            raise UnknownCase(f"unknown case: {case_id}")
        case = PatientCase.from_doc(read_json(path))
        body = parse_body(await request.body())
        configs = SessionConfigs.from_doc(body["configs"]) if "configs" in body else None
        session_id = f"sess-{case_id}"
        with lock_for(session_id):
            session = run_case(case, corpus, session_dir(session_id), configs=configs)
            sessions[session_id] = session
            return cjson(session.summary_doc(), 201)

    @app.get("/v1/sessions")
    def list_sessions() -> Response:
        rows = []
        for record_path in sorted(sessions_dir.glob("*/session.json")):
            record = read_json(record_path)
            rows.append(
                {
                    "session_id": record["session_id"],
                    "case_id": record["case_id"],
                    "phase": record["phase"],
                }
            )
        return cjson({"sessions": rows})

    @app.get("/v1/sessions/{session_id}")
    def get_session_summary(session_id: str) -> Response:
        with lock_for(session_id):
            return cjson(get_session(session_id).summary_doc())

    @app.get("/v1/sessions/{session_id}/graph")
    def get_session_graph(session_id: str) -> Response:
        with lock_for(session_id):
            return cjson(graph_to_doc(get_session(session_id).graph))

    @app.get("/v1/sessions/{session_id}/participation")
    def get_participation(session_id: str, request: Request) -> Response:
        with lock_for(session_id):
            graph = get_session(session_id).graph
        if wants_csv(request):
            return Response(content=participation_csv(graph), media_type="text/csv")
        counts = {role.value: row for role, row in participation_summary(graph).items()}
        return cjson({"participation": counts})

    @app.post("/v1/sessions/{session_id}/edits")
    async def post_edit(session_id: str, request: Request) -> Response:
        action = EditAction.from_doc(parse_body(await request.body()))
        with lock_for(session_id):
            session = get_session(session_id)
            prev = len(session.audit)
            apply_edit(session, action)
            commit(session_dir(session_id), session, prev)
            return cjson(session.summary_doc())

    @app.post("/v1/sessions/{session_id}/revalidate")
    async def post_revalidate(session_id: str, request: Request) -> Response:
        actor = required_actor(parse_body(await request.body()))
        with lock_for(session_id):
            session = get_session(session_id)
            prev = len(session.audit)
            revalidate(session, actor=actor)
            commit(session_dir(session_id), session, prev)
            return cjson(session.summary_doc())

    @app.post("/v1/sessions/{session_id}/approve")
    async def post_approve(session_id: str, request: Request) -> Response:
        body = parse_body(await request.body())
        actor = required_actor(body)
        force = bool(body.get("force", False))
        with lock_for(session_id):
            session = get_session(session_id)
            prev = len(session.audit)
            approve(session, force=force, actor=actor)
            commit(session_dir(session_id), session, prev)
            return cjson(session.summary_doc())

    @app.get("/v1/sessions/{session_id}/audit")
    def get_audit(session_id: str, request: Request) -> Response:
        with lock_for(session_id):
            entries = list(get_session(session_id).audit)
        if wants_csv(request):
            return Response(content=audit_csv(entries), media_type="text/csv")
        return cjson({"entries": [entry.to_doc() for entry in entries]})

    @app.post("/v1/sessions/{session_id}/plan")
    async def post_plan(session_id: str, request: Request) -> Response:
        actor = required_actor(parse_body(await request.body()))
        with lock_for(session_id):
            session = get_session(session_id)
            plan_doc = plan_session(
                session, session_dir(session_id), calendar_state(), actor=actor
            )
            return cjson(plan_doc, 201)

    @app.get("/v1/sessions/{session_id}/plan")
    def get_plan(session_id: str) -> Response:
        with lock_for(session_id):
            session = get_session(session_id)
            if session.plan_doc is None:
                raise NotFoundError(f"no plan for session: {session_id}")
            return cjson(session.plan_doc)

    if web_dir and Path(web_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(web_dir), html=True), name="web")

    return app
